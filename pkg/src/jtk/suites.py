"""Named check suites over maps and spin combinations."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Tuple

from . import hopf
from .errors import ConfigError, JTKError
from .maps import resolve_map
from .matrix import identity, inverse_unipotent
from .report import CheckReport, CheckResult
from .reps import (
    classical_relation_residuals,
    forward_images,
    jordanian_irrep,
    reconstruct_classical,
    verify_jordanian_relations,
)
from .similarity import (
    U_from_mu,
    build_U,
    compose_flows,
    flow_image,
    lambda_oracle,
    lambda_solve,
    mu_from_lambda,
    target_series,
)

SUITES = ("algebra", "roundtrip", "hopf", "twist", "ybe", "cocycle", "antipode", "similarity")
ALL_SUITES = SUITES + ("all",)

DEFAULT_SINGLES = (1, 2, 3, 4)
DEFAULT_PAIRS = tuple(product(DEFAULT_SINGLES, repeat=2))
DEFAULT_TRIPLES = tuple(product((1, 2, 3), repeat=3))
DEFAULT_LAMBDA_ORDER = 8

REFERENCE_LAMBDA = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 24), Fraction(-1, 96))


@dataclass(frozen=True)
class SuiteConfig:
    map: str = "minimal"
    singles: Tuple[int, ...] = DEFAULT_SINGLES
    pairs: Tuple[Tuple[int, int], ...] = DEFAULT_PAIRS
    triples: Tuple[Tuple[int, int, int], ...] = DEFAULT_TRIPLES
    order: int = DEFAULT_LAMBDA_ORDER

    def spins(self):
        combos = [[j] for j in self.singles] + [list(p) for p in self.pairs] + [list(t) for t in self.triples]
        return combos


def config_from_spins(map="minimal", two_j=None, two_j1=None, two_j2=None, two_j3=None, order=None):
    """Build a SuiteConfig from command-line style spin options."""
    for name, v in (("two-j", two_j), ("two-j1", two_j1), ("two-j2", two_j2), ("two-j3", two_j3)):
        if v is not None and (not isinstance(v, int) or v < 0):
            raise ConfigError(f"--{name} must be a non-negative integer, got {v!r}")
    if (two_j1 is None) != (two_j2 is None):
        raise ConfigError("--two-j1 and --two-j2 must be given together")
    if two_j3 is not None and two_j1 is None:
        raise ConfigError("--two-j3 needs --two-j1 and --two-j2")
    kw = {"map": map}
    if order is not None:
        if order < 1:
            raise ConfigError(f"--order must be positive, got {order}")
        kw["order"] = order
    if two_j is not None:
        kw.update(singles=(two_j,), pairs=((two_j, two_j),), triples=((two_j,) * 3,))
    elif two_j1 is not None:
        pair = (two_j1, two_j2)
        triple = (two_j1, two_j2, two_j3 if two_j3 is not None else two_j1)
        kw.update(singles=tuple(sorted(set(triple))), pairs=(pair,), triples=(triple,))
    return SuiteConfig(**kw)


def _spin_tag(*two_js):
    return "2j=" + ",".join(str(j) for j in two_js)


def _grouped(id, anchor, residuals):
    """One result for a dict of residuals; the note names what failed."""
    bad = [k for k, r in residuals.items() if not r.is_zero()]
    degree = max((r.max_degree() for r in residuals.values()), default=-1)
    nonzero = sum(r.nonzero_count() for r in residuals.values())
    return CheckResult(id, anchor, not bad, degree, nonzero, None, "; ".join(bad))


def _single(id, anchor, residual):
    return CheckResult.from_residual(id, anchor, residual)


def _guard(id, anchor, fn):
    """Pass if ``fn`` runs; an internal consistency error becomes a failure."""
    try:
        fn()
    except JTKError as exc:
        return CheckResult.from_flag(id, anchor, False, f"{type(exc).__name__}: {exc}")
    return CheckResult.from_flag(id, anchor, True)


def suite_algebra(cfg):
    m = resolve_map(cfg.map)
    for j in cfg.singles:
        rep = jordanian_irrep(m, j)
        c = rep.classical
        tag = _spin_tag(j)
        yield _grouped(f"algebra.jordanian-relations[{tag}]", "Jordanian algebra relations",
                       verify_jordanian_relations(rep))
        yield _grouped(f"algebra.classical-relations[{tag}]", "classical sl(2) relations",
                       classical_relation_residuals(c.Jp, c.Jm, c.J0))
        limits = {"T": rep.T.eval_h0() - identity(rep.dim), "H": rep.H.eval_h0() - c.J0,
                  "Y": rep.Y.eval_h0() - c.Jm}
        yield _grouped(f"algebra.classical-limit[{tag}]", "classical limit h -> 0", limits)


def suite_roundtrip(cfg):
    m = resolve_map(cfg.map)
    for j in cfg.singles:
        _, diffs = reconstruct_classical(m, jordanian_irrep(m, j))
        yield _grouped(f"roundtrip.inverse-then-forward[{_spin_tag(j)}]", "generator map round trip", diffs)


def suite_hopf(cfg):
    m = resolve_map(cfg.map)
    for j in cfg.singles:
        yield _grouped(f"hopf.antipode-counit-axioms[{_spin_tag(j)}]", "antipode and counit axioms",
                       hopf.hopf_axiom_checks(hopf.irrep(m, j)))
    for a, b in cfg.pairs:
        yield _grouped(f"hopf.coproduct-homomorphism[{_spin_tag(a, b)}]", "coproduct is an algebra map",
                       hopf.coproduct_homomorphism_check(hopf.coproducts(m, a, b)))


def suite_twist(cfg):
    m = resolve_map(cfg.map)
    for a, b in cfg.pairs:
        tag = _spin_tag(a, b)
        vmin = hopf.twist_minimal(a, b, m)
        yield _grouped(f"twist.minimal-relation[{tag}]", "minimal twist conjugates coproducts",
                       hopf.twist_relation_check(m, vmin, j_map="minimal"))
        tw = hopf.twist_general(m, a, b, check=False)
        yield _single(f"twist.symmetric-factor[{tag}]", "symmetric factor of the general twist",
                      hopf.fs_symmetry_residual(tw, m))
        yield _grouped(f"twist.general-relation[{tag}]", "general twist conjugates coproducts",
                       hopf.twist_relation_check(m, tw))
        yield _single(f"twist.r-factorization[{tag}]", "R as flipped twist times inverse twist",
                      hopf.r_factorization_residual(tw))
        one = identity(tw.V.rows)
        yield _grouped(f"twist.classical-limit[{tag}]", "classical limit h -> 0",
                       {k: v.eval_h0() - one for k, v in tw.matrices().items()})


def suite_ybe(cfg):
    m = resolve_map(cfg.map)
    for a, b in cfg.pairs:
        tag = _spin_tag(a, b)
        yield _guard(f"ybe.r-forms-agree[{tag}]", "R two-factor form equals twisted flip",
                     lambda: hopf.rmatrix(a, b, m))
        yield _single(f"ybe.triangularity[{tag}]", "triangularity of R",
                      hopf.triangularity_residual(a, b, m))
        yield _grouped(f"ybe.intertwining[{tag}]", "R intertwines coproduct and its opposite",
                       hopf.intertwining_residuals(a, b, m))
    for t in cfg.triples:
        yield _single(f"ybe.yang-baxter[{_spin_tag(*t)}]", "quantum Yang-Baxter equation",
                      hopf.ybe_residual(*t, map_spec=m))


def suite_cocycle(cfg):
    m = resolve_map(cfg.map)
    for t in cfg.triples:
        tag = _spin_tag(*t)
        yield _single(f"cocycle.minimal[{tag}]", "cocycle condition for the minimal twist",
                      hopf.cocycle_residual(*t, map_spec=m))
        if m.name != "minimal":
            yield _single(f"cocycle.general[{tag}]", "cocycle condition for the general twist",
                          hopf.cocycle_residual(*t, map_spec=m, general=True))


def suite_antipode(cfg):
    for j in cfg.singles:
        tag = _spin_tag(j)
        res = hopf.antipode_checks(j)
        yield _grouped(f"antipode.conjugators[{tag}]", "antipodes related by conjugation", res)
        ops = hopf.antipode_conjugators(j)
        one = identity(ops.G.rows)
        yield _grouped(f"antipode.classical-limit[{tag}]", "classical limit h -> 0",
                       {"G": ops.G.eval_h0() - one, "G~": ops.Gtilde.eval_h0() - one})


def suite_similarity(cfg):
    m = resolve_map(cfg.map)
    order = cfg.order
    rho = target_series(m, "minimal", order + 2)
    lam = lambda_solve(rho, order, m.name, "minimal")
    oracle = lambda_oracle(rho, order)
    yield CheckResult.from_flag(f"similarity.flow-vs-oracle[N={order}]", "similarity series",
                                lam.coefficients == oracle.coefficients)
    yield CheckResult.from_flag(
        f"similarity.flow-reproduces-target[N={order}]", "similarity series",
        flow_image(lam.coefficients, order + 2) == list(rho.coefficients[:order + 2]))
    ref = lambda_solve(target_series("contraction", "minimal", 7), 5)
    yield CheckResult.from_flag("similarity.reference-coefficients[contraction]",
                                "tabulated similarity coefficients", ref.coefficients == REFERENCE_LAMBDA)
    if m.name != "minimal":
        mid = "diag" if m.name != "diag" else "contraction"
        first = lambda_solve(target_series(m, mid, order + 2), order)
        second = lambda_solve(target_series(mid, "minimal", order + 2), order)
        chained = compose_flows(first, second, order + 2)
        yield CheckResult.from_flag(f"similarity.transitivity[via {mid}]", "similarity series",
                                    chained == flow_image(lam.coefficients, order + 2))
    for j in cfg.singles:
        tag = _spin_tag(j)
        rep = jordanian_irrep(m, j)
        local = lam if lam.order + 1 >= rep.dim else lambda_solve(target_series(m, "minimal", rep.dim + 1),
                                                                    rep.dim - 1)
        U = build_U(local, classical=rep.classical)
        Uinv = inverse_unipotent(U)
        jmin = forward_images(resolve_map("minimal"), rep.T, rep.H, rep.Y)
        c = rep.classical
        yield _grouped(f"similarity.U-conjugates[{tag}]", "transforming operator between maps",
                       {d: x - U @ y @ Uinv for d, x, y in zip("+0-", jmin, (c.Jp, c.J0, c.Jm))})
        yield _single(f"similarity.U-from-mu[{tag}]", "transforming operator between maps",
                      U_from_mu(mu_from_lambda(local), rep.T, rep.H) - U)


_SUITE_FUNCS = {
    "algebra": suite_algebra,
    "roundtrip": suite_roundtrip,
    "hopf": suite_hopf,
    "twist": suite_twist,
    "ybe": suite_ybe,
    "cocycle": suite_cocycle,
    "antipode": suite_antipode,
    "similarity": suite_similarity,
}


def validate_config(suite, cfg):
    if suite not in ALL_SUITES:
        raise ConfigError(f"unknown suite {suite!r}; choose from {', '.join(ALL_SUITES)}")
    try:
        resolve_map(cfg.map)
    except JTKError as exc:
        raise ConfigError(str(exc)) from None
    for combo in cfg.spins():
        if any(not isinstance(j, int) or j < 0 for j in combo):
            raise ConfigError(f"invalid spins {combo}")


def run_suite(suite, cfg=None):
    cfg = SuiteConfig() if cfg is None else cfg
    validate_config(suite, cfg)
    names = SUITES if suite == "all" else (suite,)
    report = CheckReport(suite, resolve_map(cfg.map).name, cfg.spins())
    for name in names:
        report.extend(_SUITE_FUNCS[name](cfg))
    return report

