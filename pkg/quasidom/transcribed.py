#!/usr/bin/env python3

"""
The gamma recurrences case by case, as they were printed.

These are kept so the corrected recurrences in `quasidom.dp` can be compared
with them key by key (modes `transcribed` and `arbitrated`).  Several cases
give wrong values; `docs/deviations.md` lists them with the smallest instances
found.  Nothing here is used by the default `literal` mode.
"""

from typing import Dict

from .gamma import (
    Best,
    Choice,
    GammaKey,
    GammaKind,
    GammaValue,
    g0_range,
    g0_single,
    g1_pair,
    g1_prefix,
    g1_tail,
    g1_triple,
    g11_run,
    undefined,
)
from .internals import DOMINATED


class TranscribedRecurrences:
    """
    Mixin for GammaEvaluator: one `_t_*` method per quantity.

    The methods read the evaluator's `low`, `low_range`, `maxlow`, `_value`,
    `_gamma` and `_plus`.
    """

    def _transcribed_table(self) -> Dict[GammaKind, object]:
        return {
            GammaKind.G0_PREFIX: self._t_g0_prefix,
            GammaKind.G0_RANGE: self._t_g0_range,
            GammaKind.G0_SINGLE: self._t_g0_single,
            GammaKind.G1_PREFIX: self._t_g1_prefix,
            GammaKind.G1_TAIL: self._t_g1_tail,
            GammaKind.G1_PAIR: self._t_g1_pair,
            GammaKind.G1_TRIPLE: self._t_g1_triple,
            GammaKind.G11_RUN: self._t_g11_run,
        }

    def _tail_or_prefix(self, j: int, i: int) -> GammaKey:
        """gamma1(j, i : i), where j == i means the unconstrained gamma1(i)."""
        return g1_prefix(i) if j == i else g1_tail(j, i)

    def _gap(self, lo: int, hi: int, bound: int, strict: bool) -> bool:
        """True if some x in [lo, hi) has low(x) > bound (or >= bound when not strict)."""
        for x in range(lo, hi):
            if (self.low(x) > bound) if strict else (self.low(x) >= bound):
                return True
        return False

    def _last_with_low(self, j: int, i: int, target) -> int:
        """The largest x in (j, i) with low(x) == target, 0 if none."""
        for x in range(i - 1, j, -1):
            if self.low(x) == target:
                return x
        return 0

    def _t_g0_prefix(self, i: int) -> GammaValue:
        if i == 1:
            return undefined("base:g0(1)")
        if i == 2:
            if self.adjacent12:
                return GammaValue(1, Choice("base:g0(2)", witness=(1,)))
            return undefined("base:g0(2)")
        key = g0_range(i, i)
        return GammaValue(self._value(key), Choice("range", (key,)))

    def _t_g0_range(self, j: int, i: int) -> GammaValue:
        if i <= 2:
            if j == i:
                return self._t_g0_prefix(i)
            return undefined("base:g0(1,2)")
        if self.maxlow(i) >= j:
            return undefined("undefined")
        best = Best()
        for jj in range(self.maxlow(i), j):
            lo = self.low_range(jj + 1, i)
            if lo > jj:
                continue
            for key in [self._tail_or_prefix(lo, jj)] + [
                g1_pair(lo, jj, k) for k in range(lo, jj)
            ]:
                best.offer(self._value(key), Choice("last-member", (key,)))
        return best.result("undefined")

    def _t_g0_single(self, j: int, i: int, k: int) -> GammaValue:
        if i == 2:
            if self.adjacent12:
                return GammaValue(1, Choice("base:g0(1,2:1)", witness=(1,)))
            return undefined("base:g0(1,2:1)")
        if self.maxlow(i) > k:
            return undefined("undefined")
        b = min(self.low_range(k + 1, i), j)
        best = Best()
        for key in [self._tail_or_prefix(b, k)] + [g1_pair(b, k, l) for l in range(b, j)]:
            best.offer(self._value(key), Choice("member", (key,)))
        return best.result("undefined")

    def _t_g1_prefix(self, i: int) -> GammaValue:
        if i == 1:
            return GammaValue(1, Choice("base:g1(1)", witness=(1,)))
        if i == 2:
            if self.adjacent12:
                return GammaValue(1, Choice("base:g1(2)", witness=(2,)))
            return GammaValue(2, Choice("base:g1(2)", witness=(1, 2)))
        b = self.low(i)
        best = Best()
        if b == i:
            self._gamma(i - 1, best, "isolated", add=(i,))
            return best.result("undefined")
        best.offer(self._value(g1_tail(b, i)), Choice("tail", (g1_tail(b, i),)))
        for j in range(b, i):
            key = g1_pair(b, i, j)
            best.offer(self._value(key), Choice("pair", (key,)))
        for j in range(b + 1, i):
            for k in range(b, j):
                key = g1_triple(b, i, j, k)
                best.offer(self._value(key), Choice("triple", (key,)))
        for j in range(b + 2, i):
            for k in range(b + 1, j):
                key = g11_run(b, i, j, k)
                best.offer(self._value(key), Choice("run", (key,)))
        return best.result("undefined")

    def _t_g1_tail(self, j: int, i: int) -> GammaValue:
        if i == 2:
            if self.adjacent12:
                return GammaValue(1, Choice("base:g1(1,2:2)", witness=(2,)))
            return undefined("base:g1(1,2:2)")
        b = self.low(i)
        if b > 1 and j <= self.low(b - 1):
            return undefined("i")
        if b > 1 and self.low(b - 1) < j < self.low_range(b, i - 1):
            best = Best()
            self._plus(best, g0_range(j, b - 1), "ii", i)
            return best.result("ii")
        #  case (iii)
        if j == 1:
            return GammaValue(1, Choice("iii:alone", add=(i,)))
        a = max(j, b)
        c = min(range(a, i), key=lambda x: (self.low(x), x))
        lc = self.low(c)
        best = Best()
        if lc <= j - 1:
            self._plus(best, g0_range(lc, j - 1), "iii", i)
            for k in range(lc, j - 1):
                self._plus(best, g0_single(lc, j - 1, k), "iii", i)
            self._plus(best, self._tail_or_prefix(lc, j - 1), "iii", i)
        return best.result("iii")

    def _t_g1_pair(self, k: int, i: int, j: int) -> GammaValue:
        if i == 2:
            #  infinite either way; with 12 an edge gamma1(1,2:2) always beats it
            if self.adjacent12:
                return GammaValue(DOMINATED, Choice("base:g1(1,2:2,1)"))
            return undefined("base:g1(1,2:2,1)")
        b = self.low(i)
        c = self.low(j)
        d = self.low_range(j + 1, i - 1)
        d1 = self.low_range(b, j - 1)
        d2 = self.low_range(b, i - 1)
        kk = min(k, b, d, d1)
        z = self._last_with_low(j, i, d)
        if j < b and self._gap(j + 1, b, j, strict=True):
            return undefined("i")
        bc = min(b, c)
        if k < bc and self._gap(k, bc, k, strict=False):
            return undefined("i")
        best = Best()
        if j < b and z < b:
            if k == j and k <= d:
                self._plus(best, g1_prefix(j), "ii.a", i)
                return best.result("ii.a")
            if k < j and min(k, d2) <= d:
                self._plus(best, g1_tail(min(k, d2), j), "ii.b", i)
                return best.result("ii.b")
            if d < min(k, d2):
                self._plus(best, g1_tail(d, j), "ii.c", i)
                for x in range(d, min(k, d2)):
                    self._plus(best, g1_pair(d, j, x), "ii.c", i)
                return best.result("ii.c")
            return undefined("ii")
        if j < b:
            if k == j and k <= d:
                self._plus(best, g1_prefix(j), "iii.a", i)
                return best.result("iii.a")
            if k < j and k <= d:
                self._plus(best, g1_tail(k, j), "iii.b", i)
                return best.result("iii.b")
            self._plus(best, g1_tail(d, j), "iii.c", i)
            return best.result("iii.c")
        if b == k == j and k <= d:
            self._plus(best, g1_prefix(j), "iv.a", i)
            return best.result("iv.a")
        if b <= c:
            return GammaValue(DOMINATED, Choice("iv.b"))
        self._plus(best, self._tail_or_prefix(kk, j), "iv.c", i)
        return best.result("iv.c")

    def _t_g1_triple(self, l: int, i: int, j: int, k: int) -> GammaValue:
        b = self.low(i)
        c = self.low(j)
        d = self.low(k)
        e = self.low_range(j + 1, i - 1)
        e1 = self.low_range(b, i - 1)
        z = self._last_with_low(j, i, e)
        if j < b and self._gap(j + 1, b, j, strict=True):
            return undefined("i")
        bc = min(b, c)
        if k < bc and self._gap(k + 1, bc, k, strict=True):
            return undefined("i")
        bcd = min(b, c, d)
        if l < bcd and self._gap(l, bcd, l, strict=False):
            return undefined("i")
        best = Best()
        if j < b and z < b:
            if j <= e:
                self._plus(best, g1_pair(l, j, k), "ii.a", i)
                return best.result("ii.a")
            if e1 <= k:
                return undefined("ii.b")
            self._plus(best, g1_pair(min(l, e), j, k), "ii.c", i)
            return best.result("ii.c")
        if z >= b:
            if e <= k:
                return undefined("iii.a")
            self._plus(best, g1_pair(l, j, k), "iii.b", i)
            return best.result("iii.b")
        return undefined("unmatched")

    def _t_g11_run(self, l: int, i: int, j: int, k: int) -> GammaValue:
        b = self.low(i)
        c = self.low(j)
        e = self.low_range(j + 1, i - 1)
        e1 = self.low_range(b, i - 1)
        z = self._last_with_low(j, i, e)
        if j < b and self._gap(j + 1, b, j, strict=True):
            return undefined("i")
        bc = min(b, c)
        if k < bc and self._gap(k + 1, bc, k, strict=True):
            return undefined("i")
        if j < b and z < b:
            if e < k or e1 <= k:
                return undefined("ii.a")
            return self._shrink_run(l, i, j, k, "ii.d" if e < j else "ii.b")
        if z >= b:
            if e <= k:
                return undefined("iii.a")
            return self._shrink_run(l, i, j, k, "iii.b")
        return undefined("unmatched")

    def _shrink_run(self, l: int, i: int, j: int, k: int, case: str) -> GammaValue:
        """Drop i: the run [l, k] plus j is what remains on G[1, j]."""
        best = Best()
        if k - l == 1:
            self._plus(best, g1_triple(l, j, k, l), f"{case}:triple", i)
        else:
            self._plus(best, g11_run(l, j, k, k - 1), f"{case}:run", i)
        return best.result(case)
