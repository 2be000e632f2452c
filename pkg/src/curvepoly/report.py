"""Orchestration of the computations behind each CLI command, producing JSON-ready reports."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrgeo import (
    CommonComponentError,
    Curve,
    CurveError,
    GenericityError,
    IrrationalPointError,
    UnsupportedCurveError,
    UnsupportedSingularityError,
    check_no_common_component,
    classify_singularities,
    intersection_count_combinatorial,
    intersection_count_resultant,
    multiplicity_counts,
    pointwise_union_milnor,
)
from .invariants import (
    QuadraticPoly,
    addition_rhs,
    betti_poly,
    dpw_freeness,
    euler_number,
    poincare_poly,
    split_poincare,
    union_milnor,
)
from .lattice import LineArrangement, build_lattice, deletion_restriction_sides, pi_poly
from .milnor import syzygy_profile, total_tjurina
from .qpoly import format_poly

SCHEMA = 1

_COMBINATORIAL_UNAVAILABLE = (
    UnsupportedCurveError,
    UnsupportedSingularityError,
    IrrationalPointError,
    GenericityError,
)


class OracleDisagreement(RuntimeError):
    """Two independent computations of the same quantity disagree."""


@dataclass
class CurveData:
    curve: Curve
    d: int
    e: int | None
    tau: int
    hilbert: tuple
    stabilization_degree: int
    tau_combinatorial: int | None
    mu: int | None
    mu_source: str | None
    points: list | None
    mdr: int
    ar_dims: tuple
    poincare: QuadraticPoly
    betti: QuadraticPoly | None
    freeness: object
    quasi_homogeneous: bool | None
    notes: list = field(default_factory=list)


def _json_value(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    return v


def _point_json(p) -> list:
    return [_json_value(c) for c in p]


def analyze_curve(curve: Curve, assume_qh: bool = False, e: int | None = None) -> CurveData:
    """Run both tau routes (when applicable), mdr, freeness and the polynomials for one curve."""
    notes = []
    f = curve.defining_poly
    d = curve.degree
    profile = total_tjurina(f, check=False)  # reducedness already checked by Curve
    tau = profile.tau
    assume_qh = assume_qh or curve.quasi_homogeneous

    points = None
    tau_comb = None
    mu = None
    mu_source = None
    qh = None
    if not curve.raw:
        try:
            points = classify_singularities(curve, strict=False)
        except _COMBINATORIAL_UNAVAILABLE as exc:
            notes.append(f"combinatorial route unavailable: {exc}")
    if points is not None:
        if all(p.local_milnor is not None for p in points):
            mu = sum(p.local_milnor for p in points)
            mu_source = "combinatorial"
        if all(p.kind != "unsupported" for p in points):
            tau_comb = sum(p.local_tjurina for p in points)
            qh = True
            if tau_comb != tau:
                raise OracleDisagreement(
                    f"{curve.name or 'curve'}: Hilbert tau = {tau} but combinatorial tau = {tau_comb}"
                )
        else:
            notes.append("singular points outside the quasi-homogeneous vocabulary; "
                         "combinatorial tau omitted")
    if mu is None and assume_qh:
        mu, mu_source = tau, "assumed-quasi-homogeneous"
        qh = True
        notes.append("mu taken equal to tau by the quasi-homogeneity assumption")
    elif assume_qh and mu != tau:
        notes.append(f"quasi-homogeneity assumption contradicted: mu = {mu}, tau = {tau}")

    syz = syzygy_profile(f)
    freeness = dpw_freeness(d, tau, syz.mdr)
    if freeness.is_free and freeness.split_factors != freeness.exponents:
        raise OracleDisagreement(
            f"free curve with exponents {freeness.exponents} but Poincaré factors {freeness.split_factors}"
        )

    ncomp = curve.num_components if curve.num_components is not None else e
    betti = None
    if ncomp is None:
        notes.append("number of irreducible components unknown; Betti polynomial skipped (use --e)")
    elif mu is None:
        notes.append("total Milnor number unavailable; Betti polynomial skipped")
    else:
        betti = betti_poly(d, ncomp, mu)

    return CurveData(
        curve=curve, d=d, e=ncomp, tau=tau, hilbert=profile.hilbert,
        stabilization_degree=profile.stabilization_degree, tau_combinatorial=tau_comb,
        mu=mu, mu_source=mu_source, points=points, mdr=syz.mdr, ar_dims=syz.ar_dims,
        poincare=poincare_poly(d, tau), betti=betti, freeness=freeness,
        quasi_homogeneous=qh, notes=notes,
    )


def _curve_json(data: CurveData) -> dict:
    c = data.curve
    out = {
        "name": c.name,
        "components": [format_poly(p) for p in c.components],
        "raw": c.raw,
        "d": data.d,
        "e": data.e,
        "tau": {
            "value": data.tau,
            "methods": ["hilbert"] + (["combinatorial"] if data.tau_combinatorial is not None else []),
            "hilbert": [list(kv) for kv in data.hilbert],
            "stabilization_degree": data.stabilization_degree,
            "combinatorial": data.tau_combinatorial,
        },
        "mu": {"value": data.mu, "source": data.mu_source},
        "mdr": data.mdr,
        "ar_dims": [list(kv) for kv in data.ar_dims],
        "poincare": data.poincare.padded(3),
        "poincare_text": str(data.poincare),
        "betti": data.betti.padded(3) if data.betti is not None else None,
        "euler_number": euler_number(data.betti) if data.betti is not None else None,
        "freeness": {
            "is_free": data.freeness.is_free,
            "mdr": data.freeness.mdr_value,
            "exponents": list(data.freeness.exponents) if data.freeness.exponents else None,
            "splits_over_Q": data.freeness.splits_over_Q,
            "split_factors": list(data.freeness.split_factors) if data.freeness.split_factors else None,
        },
    }
    if data.points is not None:
        out["singular_points"] = [
            {
                "coords": _point_json(p.coords),
                "branches": list(p.branches),
                "multiplicity": p.mult_m,
                "intersection_indices": [[i, j, v] for (i, j), v in p.pairwise_intersection_indices.items()],
                "mu": p.local_milnor,
                "tau": p.local_tjurina,
                "kind": p.kind,
            }
            for p in data.points
        ]
        out["n_m"] = {str(k): v for k, v in multiplicity_counts(data.points).items()}
    out["notes"] = list(data.notes)
    return out


def cmd_invariants(curve: Curve, *, seed: int = 0, assume_qh: bool = False, e: int | None = None) -> dict:
    data = analyze_curve(curve, assume_qh=assume_qh, e=e)
    return {"schema": SCHEMA, "command": "invariants", "seed": seed, "curve": _curve_json(data)}


def _verdict(lhs, rhs, **extra) -> dict:
    if isinstance(lhs, QuadraticPoly):
        out = {"holds": lhs == rhs, "lhs": lhs.padded(3), "rhs": rhs.padded(3)}
    else:
        out = {"holds": lhs == rhs, "lhs": lhs, "rhs": rhs}
    out.update(extra)
    return out


def cmd_union(c1: Curve, c2: Curve, *, seed: int = 0, trials: int = 5, assume_qh: bool = False) -> dict:
    """Both intersection counts, all invariants of C1, C2 and C1 ∪ C2, and the addition verdicts."""
    if not check_no_common_component(c1, c2):
        raise CommonComponentError(f"{c1.name or 'C1'} and {c2.name or 'C2'} share a component")
    union = c1.union(c2, name=f"{c1.name or 'C1'}+{c2.name or 'C2'}")
    res = intersection_count_resultant(c1, c2, seed=seed, trials=trials)
    comb = None
    notes = []
    try:
        comb = intersection_count_combinatorial(c1, c2)
    except _COMBINATORIAL_UNAVAILABLE as exc:
        notes.append(f"combinatorial intersection count unavailable: {exc}")
    if comb is not None and comb.r_distinct_points != res.r_distinct_points:
        raise OracleDisagreement(
            f"resultant route finds {res.r_distinct_points} points, combinatorial route {comb.r_distinct_points}"
        )
    r = res.r_distinct_points

    d1 = analyze_curve(c1, assume_qh=assume_qh)
    d2 = analyze_curve(c2, assume_qh=assume_qh)
    du = analyze_curve(union, assume_qh=assume_qh)

    checks = {}
    checks["poincare_addition"] = _verdict(
        du.poincare, addition_rhs(d1.poincare, d2.poincare, r),
        hypothesis_quasi_homogeneous=du.quasi_homogeneous,
    )
    if d1.betti is not None and d2.betti is not None and du.betti is not None:
        checks["betti_addition"] = _verdict(du.betti, addition_rhs(d1.betti, d2.betti, r))
        e1, e2, eu = euler_number(d1.betti), euler_number(d2.betti), euler_number(du.betti)
        checks["euler_addition"] = _verdict(eu, e1 + e2 + r - 3, euler=[e1, e2, eu])
    else:
        notes.append("Betti and Euler checks skipped (component count or Milnor number unavailable)")
    if d1.mu is not None and d2.mu is not None and du.mu is not None:
        checks["union_milnor"] = _verdict(du.mu, union_milnor(d1.mu, d2.mu, d1.d, d2.d, r))
    else:
        notes.append("union Milnor check skipped (Milnor numbers unavailable)")
    if comb is not None and d1.points is not None and d2.points is not None and du.points is not None:
        try:
            records = pointwise_union_milnor(c1, c2)
        except _COMBINATORIAL_UNAVAILABLE as exc:
            notes.append(f"pointwise union Milnor check skipped: {exc}")
        else:
            checks["union_milnor_pointwise"] = {
                "holds": all(lhs == rhs for _, lhs, rhs in records),
                "points": [
                    {"coords": _point_json(p), "lhs": lhs, "rhs": rhs} for p, lhs, rhs in records
                ],
            }

    intersection = {
        "r": r,
        "resultant": {"r": res.r_distinct_points, "multiplicities": list(res.per_point_multiplicities)},
        "combinatorial": None if comb is None else {
            "r": comb.r_distinct_points,
            "multiplicities": list(comb.per_point_multiplicities),
            "points": [_point_json(p) for p in comb.points],
        },
    }
    return {
        "schema": SCHEMA,
        "command": "union",
        "seed": seed,
        "shear_trials": trials,
        "intersection": intersection,
        "curves": {"C1": _curve_json(d1), "C2": _curve_json(d2), "union": _curve_json(du)},
        "checks": checks,
        "notes": notes,
    }


class NotALineArrangement(CurveError):
    pass


def cmd_lattice(curve: Curve, *, seed: int = 0) -> dict:
    if not curve.is_line_arrangement():
        raise NotALineArrangement(f"{curve.name or 'curve'} has a component that is not a line")
    arr = LineArrangement.from_polys(curve.components)
    flats = build_lattice(arr)
    pi = pi_poly(arr)
    verdicts = []
    if len(arr) >= 2:
        for h0 in range(len(arr)):
            lhs, rhs = deletion_restriction_sides(arr, h0)
            verdicts.append({"h0": h0, "line": format_poly(curve.components[h0]),
                             "holds": lhs == rhs, "lhs": lhs.padded(4), "rhs": rhs.padded(4)})
    tau = total_tjurina(curve.defining_poly, check=False).tau
    p = poincare_poly(curve.degree, tau)
    cone = QuadraticPoly.of(1, 1) * p
    if cone != pi:
        raise OracleDisagreement(f"pi = {pi} but (1 + t) * P = {cone}")
    return {
        "schema": SCHEMA,
        "command": "lattice",
        "seed": seed,
        "name": curve.name,
        "lines": [format_poly(c) for c in curve.components],
        "pi": pi.padded(4),
        "pi_text": str(pi),
        "flats": [
            {"rank": fl.rank, "members": sorted(fl.members), "mobius": fl.mobius,
             "point": _point_json(fl.point) if fl.point is not None else None}
            for fl in flats
        ],
        "deletion_restriction": verdicts,
        "cone_check": {"holds": True, "pi": pi.padded(4), "one_plus_t_times_poincare": cone.padded(4)},
        "poincare_split": list(split_poincare(p)) if split_poincare(p) else None,
    }
