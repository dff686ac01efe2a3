"""Small finite fields GF(p^e) with table arithmetic.

Elements are ints in ``range(q)``.  For a prime field they are the usual
residues; otherwise the base-``p`` digits of an element are its coefficients
over a fixed monic irreducible polynomial (the lexicographically first one).
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    """Reduce ``a`` (low-degree first) modulo the monic ``mod``."""
    a = a[:]
    d = len(mod) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * mod[j]) % p
    return [x % p for x in a[:d]] + [0] * max(0, d - len(a))


def _is_irreducible(f: list[int], p: int) -> bool:
    d = len(f) - 1
    for deg in range(1, d // 2 + 1):
        for coeffs in itertools.product(range(p), repeat=deg):
            g = list(coeffs) + [1]
            # polynomial remainder of f by g
            r = f[:]
            for i in range(len(r) - 1, deg - 1, -1):
                c = r[i] % p
                if c:
                    for j in range(deg + 1):
                        r[i - deg + j] = (r[i - deg + j] - c * g[j]) % p
            if not any(x % p for x in r[:deg]):
                return False
    return True


class FiniteField:
    def __init__(self, q: int) -> None:
        p, e = prime_power(q)
        self.q, self.p, self.e = q, p, e
        if e == 1:
            self.add_t = [[(a + b) % p for b in range(p)] for a in range(p)]
            self.mul_t = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            mod = next(list(c) + [1] for c in itertools.product(range(p), repeat=e)
                       if _is_irreducible(list(c) + [1], p))
            self.modulus = mod
            digits = [self._digits(x) for x in range(q)]
            self.add_t = [[self._from_digits([(x + y) % p for x, y in zip(digits[a], digits[b])])
                           for b in range(q)] for a in range(q)]
            self.mul_t = []
            for a in range(q):
                row = []
                for b in range(q):
                    prod = [0] * (2 * e - 1)
                    for i, x in enumerate(digits[a]):
                        for j, y in enumerate(digits[b]):
                            prod[i + j] += x * y
                    row.append(self._from_digits(_poly_mod(prod, mod, p)))
                self.mul_t.append(row)
        self.neg_t = [next(b for b in range(q) if self.add_t[a][b] == 0) for a in range(q)]
        self.inv_t = [0] + [next(b for b in range(1, q) if self.mul_t[a][b] == 1) for a in range(1, q)]
        self.generator = next(g for g in range(2 if q > 2 else 1, q) if self.order(g) == q - 1)

    def _digits(self, x: int) -> list[int]:
        return [(x // self.p ** i) % self.p for i in range(self.e)]

    def _from_digits(self, d: list[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(d))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def add(self, a: int, b: int) -> int:
        return self.add_t[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_t[a][self.neg_t[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_t[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_t[a]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = 1
        for _ in range(k):
            out = self.mul_t[out][a]
        return out

    def power_of_generator(self, k: int) -> int:
        return self.pow(self.generator, k % (self.q - 1))

    def order(self, a: int) -> int:
        x, k = a, 1
        while x != 1:
            x = self.mul_t[x][a]
            k += 1
        return k

    def units(self) -> range:
        return range(1, self.q)

    def element(self, x: int) -> int:
        """Coerce an int: a residue for prime fields, a digit code otherwise."""
        if self.e == 1:
            return x % self.p
        if not 0 <= x < self.q:
            raise ValueError(f"element code {x} out of range for GF({self.q})")
        return x


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    return FiniteField(q)
