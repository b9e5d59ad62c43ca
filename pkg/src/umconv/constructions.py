"""Five families of unit-memory convolutional codes over small fields.

Each builder returns a bundle holding the underlying MDS block code, the
split (H0, H1) of its parity rows, the polynomial parity check, and the
property flags the construction guarantees on its parameter range.  The
guarantees are tags only; nothing is assumed, the verification machinery
recomputes every distance.

Families (block-side parameters; the convolutional code is (n, k+delta,
delta), except the even/odd split where it is (q+1, q-tau, tau)):

  sec3    length n <= q-1, parity rows are powers of theta^i,
          H1 = the last delta rows in ascending order.
  sec4    length q, generalized Reed-Solomon on all of F_q (point 0
          included), H1 = the last delta rows reversed.
  sec5c1  length q+1, cyclic over F_{q^2} with roots beta^j, |j| <= tau,
          realified; needs k = q (mod 2).
  sec5c2  length q+1, even field size, rows split by parity of j; the
          larger realified side is H0.
  sec5p2  length q+1, constacyclic with roots theta*beta^j; needs
          k = q+1 (mod 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .blockcode import (
    RootSpec,
    base_field_closure_check,
    block_code_from_parity,
    downcast_poly,
    evaluation_parity_matrix,
    min_distance,
    realify,
    root_parity_matrix,
)
from .convcode import ConvCodeDesc, InvalidParams, unit_memory_parity
from .galois import field_for_order, make_ext_field, poly_from_roots

FAMILIES = ("sec3", "sec4", "sec5c1", "sec5c2", "sec5p2")


class ParityConditionViolated(ValueError):
    """k does not have the parity the family requires relative to q."""


class OddFieldSize(ValueError):
    """The even/odd split construction needs an even field size."""


@dataclass(frozen=True)
class FamilySpec:
    """One admissible parameter point of a family, with its guarantees.

    n and k are block-side; delta is the construction's delta (the
    convolutional degree is delta for sec3/sec4/sec5c2 and 2*delta for the
    realified families).
    """

    family: str
    q: int
    n: int
    k: int
    delta: int
    gamma: int | None = None
    tau: int | None = None
    r: int | None = None
    s: int | None = None
    expected: dict | None = dataclass_field(default=None, compare=False)


@dataclass(frozen=True)
class Bundle:
    """Constructed code: block code, row split, parity check, and tags.

    n, k, delta are the convolutional parameters; h1 holds the data rows
    only (the zero padding lives in the parity matrix).
    """

    family: str
    q: int
    n: int
    k: int
    delta: int
    gamma: int | None
    tau: int | None
    block: object
    h0: object
    h1: object
    parity: object
    desc: ConvCodeDesc
    expected: dict
    split_distances: tuple

    def to_json(self):
        return {
            "family": self.family,
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "delta": self.delta,
            "gamma": self.gamma,
            "tau": self.tau,
            "block": self.block.to_json(),
            "H0": self.h0.to_lists(),
            "H1": self.h1.to_lists(),
            "parity": self.parity.to_json(),
            "expected": dict(self.expected),
        }


def _bundle(family, q, block, h0, h1, expected, gamma, tau, want):
    parity = unit_memory_parity(h0, h1)
    desc = ConvCodeDesc.from_parity(parity)
    if (desc.n, desc.k, desc.delta) != want:
        raise RuntimeError(
            f"{family} produced {(desc.n, desc.k, desc.delta)}, expected {want}"
        )
    split = (block.d, min_distance(h0), min_distance(h1))
    return Bundle(
        family=family,
        q=q,
        n=desc.n,
        k=desc.k,
        delta=desc.delta,
        gamma=gamma,
        tau=tau,
        block=block,
        h0=h0,
        h1=h1,
        parity=parity,
        desc=desc,
        expected=expected,
        split_distances=split,
    )


def _base_field(q, field):
    if field is None:
        return field_for_order(q)
    if field.order != q:
        raise InvalidParams(f"field of order {field.order} given, q = {q}")
    return field


def _ext_field(base, ext):
    if ext is None:
        return make_ext_field(base)
    if ext.base != base:
        raise InvalidParams("extension field does not sit over the base field")
    return ext


def _range_flags(n, k, delta):
    return {
        "mds": 2 * delta <= n - k,
        "smds": 3 * delta <= n - k + 1,
        "mdp": 2 * delta < n - k,
    }


def sec3_code(q, n, k, delta, field=None):
    """Length n <= q-1 family; H1 rows ascending, no reversal."""
    field = _base_field(q, field)
    gamma = n - k - delta
    if not (1 <= k < n <= q - 1) or delta < 1 or gamma < delta:
        raise InvalidParams(f"sec3 parameters (q, n, k, delta) = {(q, n, k, delta)}")
    theta = field.theta
    roots = [field.pow(theta, i) for i in range(n - k)]
    parity = root_parity_matrix(field, roots, n)
    gen = poly_from_roots(field, roots)
    modulus = poly_from_roots(field, [field.pow(theta, i) for i in range(n)])
    block = block_code_from_parity(
        field, parity, generator_poly=gen, modulus_poly=modulus
    )
    h0 = parity.take_rows(range(gamma))
    h1 = parity.take_rows(range(gamma, gamma + delta))
    return _bundle(
        "sec3", q, block, h0, h1, _range_flags(n, k, delta), gamma, None,
        (n, k + delta, delta),
    )


def sec4_code(q, k, delta, field=None):
    """Length q family on all evaluation points; H1 rows reversed."""
    field = _base_field(q, field)
    gamma = q - k - delta
    if k < 1 or delta < 1 or gamma < delta:
        raise InvalidParams(f"sec4 parameters (q, k, delta) = {(q, k, delta)}")
    theta = field.theta
    points = [0] + [field.pow(theta, i) for i in range(1, q)]
    parity = evaluation_parity_matrix(field, points, q - k)
    block = block_code_from_parity(field, parity)
    h0 = parity.take_rows(range(gamma))
    h1 = parity.take_rows(range(gamma + delta - 1, gamma - 1, -1))
    return _bundle(
        "sec4", q, block, h0, h1, _range_flags(q, k, delta), gamma, None,
        (q, k + delta, delta),
    )


def sec5_construction_one(q, k, delta, field=None, ext=None):
    """Length q+1 cyclic family over the quadratic extension, k = q (mod 2)."""
    field = _base_field(q, field)
    if (q - k) % 2:
        raise ParityConditionViolated(f"k = {k} must have the parity of q = {q}")
    tau = (q - k) // 2
    gamma = tau + 1 - delta
    if q < 5 or k < 1 or delta < 1 or gamma <= delta:
        raise InvalidParams(f"sec5c1 parameters (q, k, delta) = {(q, k, delta)}")
    ext = _ext_field(field, ext)
    beta = ext.beta
    spec = RootSpec(ambient=ext, step=beta, lo=-tau, hi=tau)
    if not base_field_closure_check(spec):
        raise RuntimeError("root set is not closed under conjugation")
    gen = downcast_poly(ext, poly_from_roots(ext, spec.roots()))
    modulus = (field.neg(1),) + (0,) * q + (1,)
    n = q + 1
    rows_ext = root_parity_matrix(
        ext, [ext.pow(beta, j) for j in range(tau + 1)], n
    )
    h0 = realify(rows_ext.take_rows(range(gamma)))
    h1 = realify(rows_ext.take_rows(range(gamma, tau + 1)))
    if h0.rows != 2 * gamma - 1 or h1.rows != 2 * delta:
        raise RuntimeError("unexpected realified row counts")
    block = block_code_from_parity(
        field, h0.vstack(h1), generator_poly=gen, modulus_poly=modulus
    )
    guaranteed = 6 * delta <= q - k + 2
    expected = {"mds": guaranteed, "smds": guaranteed, "mdp": guaranteed}
    return _bundle(
        "sec5c1", q, block, h0, h1, expected, gamma, tau,
        (n, k + 2 * delta, 2 * delta),
    )


def sec5_construction_two(q, tau, field=None, ext=None):
    """Length q+1 family for even q, rows split by the parity of the root
    exponent; the larger realified side takes the degree-0 slot."""
    if q % 2:
        raise OddFieldSize(f"q = {q} must be even")
    field = _base_field(q, field)
    if q < 4 or not 1 <= tau <= (q - 1) // 2:
        raise InvalidParams(f"sec5c2 parameters (q, tau) = {(q, tau)}")
    ext = _ext_field(field, ext)
    beta = ext.beta
    n = q + 1
    evens = [j for j in range(tau + 1) if j % 2 == 0]
    odds = [j for j in range(tau + 1) if j % 2 == 1]
    h_even = realify(root_parity_matrix(ext, [ext.pow(beta, j) for j in evens], n))
    h_odd = realify(root_parity_matrix(ext, [ext.pow(beta, j) for j in odds], n))
    if h_even.rows != 2 * len(evens) - 1 or h_odd.rows != 2 * len(odds):
        raise RuntimeError("unexpected realified row counts")
    h0, h1 = (h_even, h_odd) if h_even.rows > h_odd.rows else (h_odd, h_even)
    spec = RootSpec(ambient=ext, step=beta, lo=-tau, hi=tau)
    if not base_field_closure_check(spec):
        raise RuntimeError("root set is not closed under conjugation")
    gen = downcast_poly(ext, poly_from_roots(ext, spec.roots()))
    modulus = (field.neg(1),) + (0,) * q + (1,)
    block = block_code_from_parity(
        field, h0.vstack(h1), generator_poly=gen, modulus_poly=modulus
    )
    expected = {"mds": True, "smds": False, "mdp": False}
    return _bundle(
        "sec5c2", q, block, h0, h1, expected, None, tau, (n, q - tau, tau)
    )


def sec5_part2_code(q, k, delta, field=None, ext=None):
    """Length q+1 constacyclic family, k = q+1 (mod 2)."""
    field = _base_field(q, field)
    if (q - k) % 2 == 0:
        raise ParityConditionViolated(f"k = {k} must have the parity of q+1 = {q + 1}")
    tau = (q - k - 1) // 2
    gamma = tau + 1 - delta
    if q < 5 or k < 1 or delta < 1 or gamma < delta:
        raise InvalidParams(f"sec5p2 parameters (q, k, delta) = {(q, k, delta)}")
    ext = _ext_field(field, ext)
    theta, beta = ext.theta, ext.beta
    spec = RootSpec(ambient=ext, step=beta, lo=-tau, hi=tau + 1, base_point=theta)
    if not base_field_closure_check(spec):
        raise RuntimeError("root set is not closed under conjugation")
    gen = downcast_poly(ext, poly_from_roots(ext, spec.roots()))
    norm = ext.pow(theta, q + 1)
    norm_base, norm_e = ext.decompose(norm)
    if norm_e:
        raise RuntimeError("norm of theta lies outside the base field")
    modulus = (field.neg(norm_base),) + (0,) * q + (1,)
    n = q + 1
    rows_ext = root_parity_matrix(
        ext, [ext.mul(theta, ext.pow(beta, j)) for j in range(1, tau + 2)], n
    )
    h0 = realify(rows_ext.take_rows(range(gamma)))
    h1 = realify(rows_ext.take_rows(range(gamma, tau + 1)))
    if h0.rows != 2 * gamma or h1.rows != 2 * delta:
        raise RuntimeError("unexpected realified row counts")
    block = block_code_from_parity(
        field, h0.vstack(h1), generator_poly=gen, modulus_poly=modulus
    )
    guaranteed = 6 * delta <= q - k + 1
    expected = {"mds": guaranteed, "smds": guaranteed, "mdp": guaranteed}
    return _bundle(
        "sec5p2", q, block, h0, h1, expected, gamma, tau,
        (n, k + 2 * delta, 2 * delta),
    )


def construct_family(spec, field=None, ext=None):
    """Build the bundle for one FamilySpec."""
    if spec.family == "sec3":
        return sec3_code(spec.q, spec.n, spec.k, spec.delta, field=field)
    if spec.family == "sec4":
        return sec4_code(spec.q, spec.k, spec.delta, field=field)
    if spec.family == "sec5c1":
        return sec5_construction_one(spec.q, spec.k, spec.delta, field=field, ext=ext)
    if spec.family == "sec5c2":
        return sec5_construction_two(spec.q, spec.tau, field=field, ext=ext)
    if spec.family == "sec5p2":
        return sec5_part2_code(spec.q, spec.k, spec.delta, field=field, ext=ext)
    raise ValueError(f"unknown family {spec.family!r}")


def admissible_parameters(q, families=None):
    """All parameter points of the chosen families at field size q, each
    tagged with the verdicts its parameter range guarantees, sorted by
    (family, n, k, delta)."""
    if families is None:
        families = FAMILIES
    families = tuple(families)
    for fam in families:
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}")
    specs = []
    if "sec3" in families:
        for n in range(3, q):
            for k in range(1, n - 1):
                for delta in range(1, (n - k) // 2 + 1):
                    specs.append(
                        FamilySpec(
                            "sec3", q, n, k, delta,
                            gamma=n - k - delta,
                            expected=_range_flags(n, k, delta),
                        )
                    )
    if "sec4" in families:
        for k in range(1, q - 1):
            for delta in range(1, (q - k) // 2 + 1):
                specs.append(
                    FamilySpec(
                        "sec4", q, q, k, delta,
                        gamma=q - k - delta,
                        expected=_range_flags(q, k, delta),
                    )
                )
    if "sec5c1" in families and q >= 5:
        for k in range(1, q - 3):
            if (q - k) % 2:
                continue
            tau = (q - k) // 2
            for delta in range(1, tau + 1):
                gamma = tau + 1 - delta
                if gamma <= delta:
                    break
                guaranteed = 6 * delta <= q - k + 2
                specs.append(
                    FamilySpec(
                        "sec5c1", q, q + 1, k, delta, gamma=gamma, tau=tau,
                        expected={
                            "mds": guaranteed,
                            "smds": guaranteed,
                            "mdp": guaranteed,
                        },
                    )
                )
    if "sec5c2" in families and q % 2 == 0 and q >= 4:
        for tau in range(1, (q - 1) // 2 + 1):
            evens = (tau + 2) // 2
            specs.append(
                FamilySpec(
                    "sec5c2", q, q + 1, q - 2 * tau, tau, tau=tau,
                    r=evens, s=tau + 1 - evens,
                    expected={"mds": True, "smds": False, "mdp": False},
                )
            )
    if "sec5p2" in families and q >= 5:
        for k in range(1, q - 2):
            if (q - k) % 2 == 0:
                continue
            tau = (q - k - 1) // 2
            if tau < 1:
                continue
            for delta in range(1, tau + 2):
                gamma = tau + 1 - delta
                if gamma < delta:
                    break
                guaranteed = 6 * delta <= q - k + 1
                specs.append(
                    FamilySpec(
                        "sec5p2", q, q + 1, k, delta, gamma=gamma, tau=tau,
                        expected={
                            "mds": guaranteed,
                            "smds": guaranteed,
                            "mdp": guaranteed,
                        },
                    )
                )
    specs.sort(key=lambda s: (s.family, s.n, s.k, s.delta))
    return specs
