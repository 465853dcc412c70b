import re


class LaurentPoly:
    """Integer Laurent polynomial in ``q``, stored as ``{exponent: coefficient}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if isinstance(coeffs, LaurentPoly):
            coeffs = coeffs.coeffs
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self.coeffs = {int(k): int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def parse(cls, text):
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        out = {}
        for sign, coeff, q, exp in re.findall(r"([+-]?)(\d*)(q?)(?:\^\(?(-?\d+)\)?)?", text):
            if not (coeff or q):
                continue
            c = int(coeff) if coeff else 1
            if sign == "-":
                c = -c
            e = (int(exp) if exp else 1) if q else 0
            out[e] = out.get(e, 0) + c
        return cls(out)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in LaurentPoly(other).coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-LaurentPoly(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: v * other for k, v in self.coeffs.items()})
        out = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __getitem__(self, exp):
        return self.coeffs.get(exp, 0)

    def __call__(self, q):
        return sum(c * q**e for e, c in self.coeffs.items())

    def exponents(self):
        return sorted(self.coeffs)

    def is_monomial(self):
        return len(self.coeffs) == 1

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                body = ("" if c == 1 else str(c)) + ("q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})")
            parts.append(sign + body)
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s

    def __repr__(self):
        return f"LaurentPoly({self})"


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
