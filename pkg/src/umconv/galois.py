"""Exact arithmetic in small finite fields and their quadratic extensions.

Elements of GF(p^m) are plain Python integers in ``range(q)``: the element
with power-basis coordinates (c0, ..., c_{m-1}) is encoded as
``sum(c_i * p**i)``.  For p = 2 this is the familiar bit representation and
addition is XOR.  All arithmetic is exact; log/antilog tables are built for
small fields as an acceleration only, and every operation gives identical
results with and without them.

Elements of a quadratic extension GF(q^2) over a base GF(q) are encoded the
same way relative to the basis (1, e), where e is the residue class of the
extension variable: ``enc(a + e*b) = enc(a) + q * enc(b)``.
"""

from __future__ import annotations

import itertools

_TABLE_LIMIT = 4096
_ADD_TABLE_LIMIT = 512


class NotPrime(ValueError):
    """Characteristic is not a prime number."""


class ReducibleModulus(ValueError):
    """Proposed modulus polynomial factors over the coefficient field."""


class DegreeMismatch(ValueError):
    """Modulus polynomial has the wrong degree or is not monic."""


class NotPrimitive(ValueError):
    """Element does not generate the multiplicative group."""


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _multiplicative_order(mul, x, group_order):
    """Order of x in a cyclic group of the given order, via prime factors."""
    order = group_order
    for ell in _prime_factors(group_order):
        while order % ell == 0:
            y = _pow_by_squaring(mul, x, order // ell)
            if y != 1:
                break
            order //= ell
    return order


def _pow_by_squaring(mul, x, e):
    r = 1
    b = x
    while e:
        if e & 1:
            r = mul(r, b)
        b = mul(b, b)
        e >>= 1
    return r


class Field:
    """GF(p^m) with integer-encoded elements.

    The modulus is a monic irreducible polynomial of degree m over GF(p),
    given as an ascending coefficient tuple.  When omitted, the monic
    irreducible polynomial with the smallest integer encoding is used, and
    ``theta`` defaults to the element of multiplicative order q-1 with the
    smallest encoding.
    """

    def __init__(self, p, m, modulus=None, use_tables=True):
        if not _is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be positive, got {m}")
        self.p = p
        self.m = m
        self.q = p**m
        self.order = self.q
        self.char = p

        if modulus is None:
            modulus = _smallest_irreducible(p, m)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise DegreeMismatch(
                f"modulus must be monic of degree {m}, got coefficients {modulus}"
            )
        if any(not 0 <= c < p for c in modulus):
            raise ValueError(f"modulus coefficients must lie in range({p})")
        if m > 1 and not _is_irreducible_mod_p(p, modulus):
            raise ReducibleModulus(f"modulus {modulus} factors over GF({p})")
        self.modulus = modulus

        # Reduction vectors for x^t, t = m .. 2m-2, as digit tuples.
        self._xpow = self._reduction_table()

        self._log = None
        self._exp = None
        self._add_table = None
        self.theta = self._find_theta()
        if use_tables and self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- encoding ---------------------------------------------------------

    def coeffs(self, x):
        """Power-basis coordinates of x, ascending, length m."""
        self._check(x)
        out = []
        for _ in range(self.m):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def from_coeffs(self, cs):
        if len(cs) > self.m:
            raise DegreeMismatch(f"too many coordinates for degree {self.m}")
        x = 0
        for c in reversed(tuple(cs)):
            if not 0 <= c < self.p:
                raise ValueError(f"coordinate {c} not in range({self.p})")
            x = x * self.p + c
        return x

    def _check(self, x):
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element encoding of GF({self.q})")

    # -- construction helpers ---------------------------------------------

    def _reduction_table(self):
        p, m, mod = self.p, self.m, self.modulus
        if m == 1:
            return []
        table = []
        cur = [(-mod[i]) % p for i in range(m)]  # digits of x^m
        table.append(tuple(cur))
        for _ in range(m + 1, 2 * m - 1):
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                head = table[0]
                cur = [(cur[i] + carry * head[i]) % p for i in range(m)]
            table.append(tuple(cur))
        return table

    def _find_theta(self):
        group = self.q - 1
        if group == 1:
            return 1
        for x in range(1, self.q):
            if _multiplicative_order(self._mul_direct, x, group) == group:
                return x
        raise NotPrimitive(f"no generator found in GF({self.q})")  # unreachable

    def _build_tables(self):
        q = self.q
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            exp[i + q - 1] = acc
            log[acc] = i
            acc = self._mul_direct(acc, self.theta)
        if acc != 1:
            raise NotPrimitive(f"theta {self.theta} does not have order {q - 1}")
        self._exp = exp
        self._log = log
        if self.p != 2 and q <= _ADD_TABLE_LIMIT:
            self._add_table = [
                [self._add_direct(a, b) for b in range(q)] for a in range(q)
            ]

    # -- arithmetic, direct routes ----------------------------------------

    def _add_direct(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _mul_direct(self, a, b):
        if a == 0 or b == 0:
            return 0
        p, m = self.p, self.m
        da = self.coeffs(a)
        db = self.coeffs(b)
        conv = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    conv[i + j] = (conv[i + j] + ca * cb) % p
        digits = list(conv[:m])
        for t in range(m, 2 * m - 1):
            c = conv[t]
            if c:
                red = self._xpow[t - m]
                for i in range(m):
                    digits[i] = (digits[i] + c * red[i]) % p
        return self.from_coeffs(digits)

    # -- arithmetic, public -----------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_direct(a, b)

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        while a:
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_direct(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[self.q - 1 - self._log[a]]
        return _pow_by_squaring(self.mul, a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        self._check(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        e %= self.q - 1
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return _pow_by_squaring(self.mul, a, e)

    def order_of(self, x):
        self._check(x)
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        return _multiplicative_order(self.mul, x, self.q - 1)

    def elements(self):
        return range(self.q)

    def nonzero_elements(self):
        return range(1, self.q)

    # -- rendering ---------------------------------------------------------

    def element_str(self, x):
        """Symbolic form in the power basis, e.g. "1+t^2" for enc 5 over GF(8)."""
        self._check(x)
        if x == 0:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs(x)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "t" if i == 1 else f"t^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)

    def __eq__(self, other):
        if not isinstance(other, Field) or isinstance(other, ExtField):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, m={self.m}, modulus={self.modulus})"


def _is_irreducible_mod_p(p, modulus):
    coeff_field = Field(p, 1)
    return poly_is_irreducible(coeff_field, modulus)


def _smallest_irreducible(p, m):
    if m == 1:
        return (0, 1)
    for tail in range(p**m):
        digits = []
        t = tail
        for _ in range(m):
            digits.append(t % p)
            t //= p
        cand = tuple(digits) + (1,)
        if _is_irreducible_mod_p(p, cand):
            return cand
    raise ReducibleModulus(f"no irreducible polynomial of degree {m} over GF({p})")


def make_field(p, m, modulus=None):
    """Build GF(p^m); see Field for the defaulting rules."""
    return Field(p, m, modulus=modulus)


def field_for_order(q, modulus=None):
    """GF(q) for a prime power q, factoring q as p^m."""
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            m = 0
            t = q
            while t % p == 0:
                t //= p
                m += 1
            if t != 1:
                raise ValueError(f"{q} is not a prime power")
            return make_field(p, m, modulus=modulus)
    raise ValueError(f"{q} is not a prime power")


class ExtField:
    """Quadratic extension GF(q^2) of a base field, with basis (1, e).

    The modulus is a monic irreducible quadratic over the base field, given
    as ascending base-field encodings (c0, c1, 1); e denotes the residue
    class of the extension variable, so e^2 = -c1*e - c0.  ``theta`` is a
    generator of the multiplicative group and ``beta = theta^(q-1)`` has
    order exactly q+1.  When the residue e itself has order q+1 the default
    theta is the smallest-encoding generator with theta^(q-1) == e, which
    makes beta the residue class; otherwise the smallest-encoding generator
    is used.
    """

    def __init__(self, base, modulus=None, theta=None, use_tables=True):
        if not isinstance(base, Field):
            raise TypeError("base must be a Field")
        self.base = base
        self.order = base.q * base.q
        self.char = base.p

        if modulus is None:
            modulus = self._smallest_quadratic()
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != 3 or modulus[-1] != 1:
            raise DegreeMismatch(f"modulus must be monic quadratic, got {modulus}")
        for c in modulus[:2]:
            base._check(c)
        if any(self._eval_quadratic(modulus, x) == 0 for x in base.elements()):
            raise ReducibleModulus(f"quadratic {modulus} has a root in the base field")
        self.modulus = modulus

        self._log = None
        self._exp = None
        self.theta = self._find_theta(theta)
        if use_tables and self.order <= _TABLE_LIMIT:
            self._build_tables()
        self.beta = self.pow(self.theta, base.q - 1)

    def _eval_quadratic(self, mod, x):
        b = self.base
        return b.add(b.add(mod[0], b.mul(mod[1], x)), b.mul(x, x))

    def _smallest_quadratic(self):
        b = self.base
        for c1 in b.elements():
            for c0 in b.elements():
                cand = (c0, c1, 1)
                if all(self._eval_quadratic(cand, x) != 0 for x in b.elements()):
                    return cand
        raise ReducibleModulus(f"no irreducible quadratic over GF({b.q})")

    def _find_theta(self, override):
        group = self.order - 1
        if override is not None:
            self._check(override)
            if _multiplicative_order(self._mul_direct, override, group) != group:
                raise NotPrimitive(
                    f"{override} does not have order {group} in GF({self.order})"
                )
            return override
        q = self.base.q
        residue = q  # enc of e
        want_residue = (
            _multiplicative_order(self._mul_direct, residue, group) == q + 1
        )
        for x in range(1, self.order):
            if _multiplicative_order(self._mul_direct, x, group) != group:
                continue
            if not want_residue:
                return x
            if _pow_by_squaring(self._mul_direct, x, q - 1) == residue:
                return x
        raise NotPrimitive(f"no generator found in GF({self.order})")

    def _build_tables(self):
        n = self.order
        exp = [1] * (2 * (n - 1))
        log = [0] * n
        acc = 1
        for i in range(n - 1):
            exp[i] = acc
            exp[i + n - 1] = acc
            log[acc] = i
            acc = self._mul_direct(acc, self.theta)
        if acc != 1:
            raise NotPrimitive(f"theta {self.theta} does not have order {n - 1}")
        self._exp = exp
        self._log = log

    # -- encoding ----------------------------------------------------------

    def decompose(self, x):
        """Coordinates (a, b) with x = a + e*b, both base-field encodings."""
        self._check(x)
        return x % self.base.q, x // self.base.q

    def compose(self, a, b):
        self.base._check(a)
        self.base._check(b)
        return a + self.base.q * b

    def in_base(self, x):
        return self.decompose(x)[1] == 0

    def _check(self, x):
        if not 0 <= x < self.order:
            raise ValueError(f"{x} is not an element encoding of GF({self.order})")

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self.char == 2:
            return a ^ b
        f = self.base
        a0, a1 = self.decompose(a)
        b0, b1 = self.decompose(b)
        return self.compose(f.add(a0, b0), f.add(a1, b1))

    def neg(self, a):
        if self.char == 2:
            return a
        f = self.base
        a0, a1 = self.decompose(a)
        return self.compose(f.neg(a0), f.neg(a1))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _mul_direct(self, a, b):
        if a == 0 or b == 0:
            return 0
        f = self.base
        a0, a1 = a % f.q, a // f.q
        b0, b1 = b % f.q, b // f.q
        c0, c1 = self.modulus[0], self.modulus[1]
        hi = f.mul(a1, b1)  # coefficient of e^2
        r0 = f.sub(f.mul(a0, b0), f.mul(c0, hi))
        r1 = f.sub(f.add(f.mul(a0, b1), f.mul(a1, b0)), f.mul(c1, hi))
        return r0 + f.q * r1

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_direct(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[self.order - 1 - self._log[a]]
        return _pow_by_squaring(self.mul, a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        self._check(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        e %= self.order - 1
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        return _pow_by_squaring(self.mul, a, e)

    def frobenius(self, x):
        return self.pow(x, self.base.q)

    def order_of(self, x):
        self._check(x)
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        return _multiplicative_order(self.mul, x, self.order - 1)

    def elements(self):
        return range(self.order)

    def nonzero_elements(self):
        return range(1, self.order)

    # -- rendering -----------------------------------------------------------

    def element_str(self, x):
        a, b = self.decompose(x)
        f = self.base
        if b == 0:
            return f.element_str(a)
        bs = f.element_str(b)
        epart = "e" if b == 1 else (f"({bs})e" if "+" in bs else f"{bs}e")
        if a == 0:
            return epart
        return f"{f.element_str(a)}+{epart}"

    def __eq__(self, other):
        if not isinstance(other, ExtField):
            return NotImplemented
        return (self.base, self.modulus, self.theta) == (
            other.base,
            other.modulus,
            other.theta,
        )

    def __hash__(self):
        return hash((self.base, self.modulus, self.theta))

    def __repr__(self):
        return f"ExtField(base=GF({self.base.q}), modulus={self.modulus}, theta={self.theta})"


def make_ext_field(base, modulus=None, theta=None):
    """Build GF(q^2) over the given base; see ExtField for defaulting rules."""
    return ExtField(base, modulus=modulus, theta=theta)


# -- polynomials over a field, ascending coefficient tuples -------------------
#
# The zero polynomial is the empty tuple.  These helpers work for Field and
# ExtField alike since both expose the same scalar operations.


def poly_trim(cs):
    cs = tuple(cs)
    end = len(cs)
    while end > 0 and cs[end - 1] == 0:
        end -= 1
    return cs[:end]


def poly_deg(cs):
    return len(poly_trim(cs)) - 1


def poly_add(field, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return poly_trim(out)


def poly_neg(field, a):
    return tuple(field.neg(c) for c in a)


def poly_scale(field, a, c):
    if c == 0:
        return ()
    return poly_trim(field.mul(x, c) for x in a)


def poly_mul(field, a, b):
    a = poly_trim(a)
    b = poly_trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] = field.add(out[i + j], field.mul(ca, cb))
    return tuple(out)


def poly_eval(field, a, x):
    acc = 0
    for c in reversed(poly_trim(a)):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_divmod(field, a, b):
    a = list(poly_trim(a))
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lead_inv = field.inv(b[-1])
    if len(a) - 1 < db:
        return (), poly_trim(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        f = field.mul(c, lead_inv)
        quot[i - db] = f
        for j, cb in enumerate(b):
            a[i - db + j] = field.sub(a[i - db + j], field.mul(f, cb))
    return poly_trim(quot), poly_trim(a)


def poly_mod(field, a, b):
    return poly_divmod(field, a, b)[1]


def poly_gcd(field, a, b):
    a = poly_trim(a)
    b = poly_trim(b)
    while b:
        a, b = b, poly_mod(field, a, b)
    if a:
        a = poly_scale(field, a, field.inv(a[-1]))
    return a


def poly_from_roots(field, roots):
    out = (1,)
    for r in roots:
        out = poly_mul(field, out, (field.neg(r), 1))
    return out


def poly_is_irreducible(field, cs):
    """Trial division by all monic polynomials of degree <= deg/2."""
    cs = poly_trim(cs)
    deg = len(cs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(field.elements(), repeat=d):
            divisor = tuple(tail) + (1,)
            if not poly_mod(field, cs, divisor):
                return False
    return True


def poly_str(field, cs, var="x"):
    cs = poly_trim(cs)
    if not cs:
        return "0"
    terms = []
    for i, c in enumerate(cs):
        if c == 0:
            continue
        cstr = field.element_str(c)
        if i == 0:
            terms.append(cstr)
            continue
        vstr = var if i == 1 else f"{var}^{i}"
        if c == 1:
            terms.append(vstr)
        elif "+" in cstr:
            terms.append(f"({cstr}){vstr}")
        else:
            terms.append(f"{cstr}{vstr}")
    return "+".join(terms)
