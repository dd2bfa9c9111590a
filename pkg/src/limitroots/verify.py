"""Named verification suites driving machine-readable pass/fail reports.

Each suite returns a dict with a boolean "pass" plus the measured
quantities, so the CLI can emit JSON and exit nonzero on failure.
"""

import math

import numpy as np

from .arrangement import (
    codim2_spacelike,
    fundamental_weights,
    intersection_equals_unimodular,
    roots_by_depth,
    IntersectionKind,
)
from .elements import element_of, enumerate_elements
from .geometry import make_system
from .limits import (
    hausdorff,
    power_dynamics,
    sample_limit_roots,
)
from .projective import chart_distance, to_chart
from .spectral import classify

SUITES = {}


def suite(name):
    def wrap(fn):
        SUITES[name] = fn
        return fn

    return wrap


@suite("spectra")
def verify_spectra(sys=None, **_):
    """Eigenvalues of the rank-5 counterexample element: 1 and 7 +/- 4*sqrt(3),
    the irrational pair with multiplicity two each."""
    sys = sys or make_system("fig8")
    elem = element_of(sys, (0, 1, 3, 4))
    evals = np.sort_complex(np.linalg.eigvals(elem.matrix))
    expected = np.sort_complex(
        np.array(
            [7 - 4 * math.sqrt(3), 7 - 4 * math.sqrt(3), 1.0, 7 + 4 * math.sqrt(3), 7 + 4 * math.sqrt(3)]
        )
    )
    err = float(np.max(np.abs(evals - expected)))
    sig = sys.signature
    ok = err < 1e-8 and sig == (3, 2, 0)
    return {
        "pass": bool(ok),
        "signature": list(sig),
        "eigenvalues": [repr(complex(v)) for v in evals],
        "max_error": err,
        "tolerance": 1e-8,
    }


@suite("isotropy")
def verify_isotropy(sys=None, core=(2, 5), conj=(0, 2), dedup_eps=1e-6, **_):
    """Every sampled limit root sits on the isotropic cone inside the simplex."""
    sys = sys or make_system("universal3:1")
    store = enumerate_elements(sys, max(core[1], conj[1]))
    ps = sample_limit_roots(sys, store, core, conj, dedup_eps)
    coords = ps.coords()
    max_b = float(max(abs(r.point.bnorm) for r in ps.records))
    min_coord = float(coords.min())
    max_coord = float(coords.max())
    ok = max_b < 1e-7 and min_coord > -1e-9 and max_coord < 1 + 1e-9
    return {
        "pass": bool(ok),
        "points": len(ps),
        "max_abs_bnorm": max_b,
        "min_coord": min_coord,
        "max_coord": max_coord,
        "tolerances": {"bnorm": 1e-7, "hull": 1e-9},
    }


@suite("density")
def verify_density(sys=None, budgets=((2, 2), (4, 4), (6, 6)), dedup_eps=1e-6, **_):
    """Hausdorff distances to the largest budget shrink as the budget grows."""
    sys = sys or make_system("universal3:1")
    (b0, b1, b2) = budgets
    store = enumerate_elements(sys, max(max(b) for b in budgets))
    sets = [
        sample_limit_roots(sys, store, (2, core), (0, conj), dedup_eps)
        for core, conj in budgets
    ]
    d_small = hausdorff(sets[0], sets[2])
    d_mid = hausdorff(sets[1], sets[2])
    ok = d_mid <= d_small
    return {
        "pass": bool(ok),
        "budgets": [list(b) for b in budgets],
        "hausdorff_small_vs_large": d_small,
        "hausdorff_mid_vs_large": d_mid,
    }


def _mp_eigenvector(M_mp, lam, v0, steps=6):
    """Inverse iteration with Rayleigh updates, in the ambient mp precision."""
    import mpmath

    n = M_mp.rows
    v = mpmath.matrix([mpmath.mpf(x) for x in v0])
    v /= mpmath.norm(v)
    lam = mpmath.mpf(lam)
    eye = mpmath.eye(n)
    for _ in range(steps):
        shift = lam * (1 + mpmath.mpf("1e-30"))
        try:
            v = mpmath.lu_solve(M_mp - shift * eye, v)
        except ZeroDivisionError:
            break
        v /= mpmath.norm(v)
        lam = (v.T * (M_mp * v))[0] / (v.T * v)[0]
    return lam, v


def _mp_case2_base(sys, w, sc, dps):
    """Case-2 starting vector x_minus + u, accurate to the mp working precision.

    The floating-point matrix w is only a B-isometry to roundoff, so the
    invariant decomposition must come from eigenvectors of w itself (not
    from B-orthogonality): any leftover expanding component gets amplified
    by lambda per step and overruns the accumulation point.
    """
    import mpmath

    with mpmath.workdps(dps):
        lam, _, x_minus = sc.dominant
        M_mp = mpmath.matrix(np.asarray(w, float).tolist())
        _, xm = _mp_eigenvector(M_mp, 1.0 / lam, x_minus)
        # The remaining (unimodular) eigenvalue, estimated from the dense
        # spectrum, then refined together with its eigenvector.
        mid = min(np.real(sc.eigenvalues), key=lambda e: abs(abs(e) - 1.0))
        _, u = _mp_eigenvector(M_mp, float(mid), sc.unimodular_basis[:, 0])
        base = xm / mpmath.norm(xm) + u / mpmath.norm(u)
        return list(base)


@suite("sandwich")
def verify_sandwich(sys=None, depth=4, dynamics_k=400, dynamics_tol=1e-5, dps=60, **_):
    """Space-like arrangement intersections equal unimodular subspaces, and
    Case-2 trajectories accumulate on them."""
    sys = sys or make_system("universal3:1.1")
    roots = roots_by_depth(sys, depth)
    intersections = [
        ci
        for ci in codim2_spacelike(sys, roots)
        if ci.kind is IntersectionKind.SPACE_LIKE
    ]
    n_fail_angle = 0
    n_fail_dyn = 0
    worst_dyn = 0.0
    for ci in intersections:
        if not intersection_equals_unimodular(sys, ci):
            n_fail_angle += 1
            continue
        r1, r2 = ci.pair
        w = sys.reflection_in(r1.vector) @ sys.reflection_in(r2.vector)
        sc = classify(sys, w)
        lam = sc.dominant[0]
        base = _mp_case2_base(sys, w, sc, dps)
        # The contracting component shrinks by 1/lambda per step, so the
        # approach happens within a few times log(1/tol)/log(lambda) steps.
        k = min(dynamics_k, int(24.0 / math.log10(lam)) + 4)
        traj = power_dynamics(sys, w, base, k, dps=dps)
        target = ci.chart_point(sys)
        d = min(chart_distance(p, target) for p in traj)
        worst_dyn = max(worst_dyn, d)
        if d > dynamics_tol:
            n_fail_dyn += 1
    ok = n_fail_angle == 0 and n_fail_dyn == 0 and len(intersections) > 0
    return {
        "pass": bool(ok),
        "depth": depth,
        "pairs": len(intersections),
        "angle_failures": n_fail_angle,
        "dynamics_failures": n_fail_dyn,
        "worst_dynamics_residual": worst_dyn,
        "dynamics_tolerance": dynamics_tol,
    }


@suite("weights")
def verify_weights(graphs=("fig1a", "fig1b", "fig8", "universal3:1", "universal3:1.1"), **_):
    """Dual-basis identity on all built-in graphs; the universal rank-3 weights
    are space-like and coincide with simple-pair arrangement intersections."""
    worst_identity = 0.0
    for name in graphs:
        sys = make_system(name)
        weights = fundamental_weights(sys)
        W = np.column_stack([w.vector for w in weights])
        worst_identity = max(
            worst_identity, float(np.max(np.abs(sys.form @ W - np.eye(sys.rank))))
        )
    sys = make_system("universal3:1.1")
    weights = fundamental_weights(sys)
    bnorms = [float(w.vector @ sys.form @ w.vector) for w in weights]
    roots = roots_by_depth(sys, 1)
    cis = codim2_spacelike(sys, roots)
    worst_match = math.inf
    matches = []
    for w in weights:
        wpt = to_chart(sys, w.vector)
        best = min(chart_distance(wpt, ci.chart_point(sys)) for ci in cis)
        matches.append(best)
    worst_match = max(matches)
    ok = (
        worst_identity < 1e-10
        and all(abs(b - 0.0396825396825) < 1e-6 for b in bnorms)
        and all(b > 0 for b in bnorms)
        and worst_match < 1e-7
    )
    return {
        "pass": bool(ok),
        "identity_error": worst_identity,
        "weight_bnorms": bnorms,
        "intersection_match_distances": matches,
        "tolerances": {"identity": 1e-10, "bnorm": 1e-6, "match": 1e-7},
    }


def run_suite(name, **kwargs):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    return SUITES[name](**kwargs)
