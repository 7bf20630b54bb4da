"""Boundedness, compactness, smoothing and summing classification.

Verdicts come in five flavours because the underlying criteria do: support
dichotomies decide Yes/No outright, while the space-shrinking and summing
questions only carry non-matching sufficient and necessary series
conditions.  Convergence of a series is asserted only when a symbolic decay
certificate (geometric from the support infimum, or a closed-form power
envelope) yields a tail bound; raw partial sums never certify anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .focknorm import INF, _check_exponent
from .hausdorff import HausdorffOperator
from .measure import (
    CLOSED_FORM,
    DecayBound,
    DivergentMoment,
    MeasureSpec,
    normalize,
    support_report,
)


class HypothesisNotDeclared(Exception):
    """A weighted-space compactness query without the weight's limit flags."""


class CriterionInapplicable(Exception):
    """The requested criterion does not cover the given exponent range."""


class Verdict(str, Enum):
    YES = "Yes"
    NO = "No"
    SUFFICIENT_HOLDS = "SufficientHolds"
    NECESSARY_FAILS = "NecessaryFails"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class SeriesVerdict:
    """Outcome of a series or sup condition on the moment sequence."""

    series_id: str
    kind: str  # "series" | "sup"
    power: float
    weight_exponent: float
    n_terms: int
    partial: float  # partial sum, or prefix max for sup conditions
    tail_bound: float | None
    outcome: str  # converges|diverges|unknown, bounded|unbounded|unknown
    witness: str | None = None

    def as_dict(self) -> dict:
        return {
            "criterion": self.series_id,
            "quantity": self.partial,
            "threshold": "finite",
            "outcome": self.outcome,
            "tail_bound": self.tail_bound,
            "witness": self.witness,
            "terms": self.n_terms,
        }


@dataclass
class ClassReport:
    """A verdict with the evidence trail of which criterion fired."""

    question: str
    verdict: Verdict
    params: dict = field(default_factory=dict)
    evidence: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "question": self.question,
            "verdict": self.verdict.value,
            "params": self.params,
            "evidence": self.evidence,
        }


# -- series machinery ---------------------------------------------------------

QUAD_BACKED_HORIZON = 256


def _as_operator(term) -> tuple:
    """Normalize the series source to (moment_fn, upper, lower, horizon_cap)."""
    if isinstance(term, MeasureSpec):
        term = HausdorffOperator(term)
    if isinstance(term, HausdorffOperator):
        m = term.measure
        _, tag = m.weighted_mass(0.0)
        cap = None if tag == CLOSED_FORM else QUAD_BACKED_HORIZON
        return term.eigenvalue, m.decay_upper(), m.decay_lower(), cap
    if callable(term):
        return term, None, None, None
    seq = list(term)
    return (lambda n: seq[n]), None, None, len(seq) - 1


def _geometric_tail(C: float, rho: float, v: float, N: int) -> float | None:
    """Bound on sum_{n>N} C * rho**n * (n+1)**v for rho < 1."""
    if v <= 0.0:
        s = 1.0 / (1.0 - rho)
    else:
        grow = rho * math.exp(v / (N + 2.0))
        if grow >= 1.0:
            return None
        s = 1.0 / (1.0 - grow)
    log_tail = math.log(C) + (N + 1.0) * math.log(rho) + v * math.log(N + 2.0)
    return math.exp(log_tail) * s


def _power_tail(C: float, v: float, N: int) -> float:
    """Bound on sum_{n>N} C * (n+1)**v for v < -1 via the integral test."""
    return C * (N + 1.0) ** (v + 1.0) / (-v - 1.0)


def _partial_sum(fn, power: float, w: float, horizon: int) -> tuple[float, int]:
    total = 0.0
    for n in range(horizon + 1):
        term = fn(n) ** power * (n + 1.0) ** w
        total += term
        if term < 1e-18 * total:
            return total, n
        if total > 1e20:
            return total, n
    return total, horizon


def series_verdict(
    term,
    weight_exponent: float = 0.0,
    power: float = 1.0,
    n_terms: int = 10_000,
    upper: DecayBound | None = None,
    lower: DecayBound | None = None,
    series_id: str | None = None,
) -> SeriesVerdict:
    """Certified verdict on sum over n of mu_n**power * (n+1)**weight_exponent.

    ``term`` is a measure, an operator, a callable n -> mu_n, or a finite
    sequence; decay certificates are pulled from the measure when available
    and may be overridden.
    """
    if not power > 0:
        raise ValueError("power must be > 0")
    fn, up, lo, cap = _as_operator(term)
    if upper is not None:
        up = upper
    if lower is not None:
        lo = lower
    horizon = n_terms if cap is None else min(n_terms, cap)
    sid = series_id or f"series[mu^{power:g}*(n+1)^{weight_exponent:g}]"

    outcome, tail, witness = "unknown", None, None
    if up is not None:
        rho = up.ratio**power
        v = weight_exponent - up.power * power
        if rho < 1.0:
            tail = _geometric_tail(up.const**power, rho, v, horizon)
            if tail is not None:
                outcome = "converges"
                witness = f"geometric envelope ratio {up.ratio:g}"
        elif up.ratio == 1.0 and v < -1.0:
            outcome = "converges"
            tail = _power_tail(up.const**power, v, horizon)
            witness = f"power envelope (n+1)^{v:g}"
    if outcome == "unknown" and lo is not None:
        v = weight_exponent - lo.power * power
        if lo.ratio > 1.0:
            outcome = "diverges"
            witness = f"terms grow geometrically at ratio {lo.ratio ** power:g}"
        elif lo.ratio == 1.0 and v >= -1.0:
            outcome = "diverges"
            witness = f"terms dominate the divergent p-series (n+1)^{v:g}"

    partial, used = _partial_sum(fn, power, weight_exponent, horizon)
    return SeriesVerdict(
        series_id=sid,
        kind="series",
        power=power,
        weight_exponent=weight_exponent,
        n_terms=used,
        partial=partial,
        tail_bound=tail,
        outcome=outcome,
        witness=witness,
    )


def sup_verdict(
    term,
    weight_exponent: float = 0.0,
    n_terms: int = 10_000,
    upper: DecayBound | None = None,
    lower: DecayBound | None = None,
    series_id: str | None = None,
) -> SeriesVerdict:
    """Certified verdict on sup over n of mu_n * (n+1)**weight_exponent."""
    fn, up, lo, cap = _as_operator(term)
    if upper is not None:
        up = upper
    if lower is not None:
        lo = lower
    horizon = min(n_terms, cap) if cap is not None else min(n_terms, 2048)
    sid = series_id or f"sup[mu*(n+1)^{weight_exponent:g}]"

    outcome, bound, witness = "unknown", None, None
    if up is not None:
        v = weight_exponent - up.power
        if up.ratio < 1.0:
            # envelope C rho^n (n+1)^v decreases past n* = v / (-log rho)
            n_star = max(0, int(math.ceil(v / (-math.log(up.ratio)))) if v > 0 else 0)
            horizon = max(horizon, n_star + 1)
            tail_sup = up.const * up.ratio**horizon * (horizon + 1.0) ** v
            outcome = "bounded"
            witness = f"geometric envelope ratio {up.ratio:g}"
            bound = tail_sup
        elif up.ratio == 1.0 and v <= 0.0:
            outcome = "bounded"
            bound = up.const
            witness = f"power envelope (n+1)^{v:g}"
    if outcome == "unknown" and lo is not None:
        v = weight_exponent - lo.power
        if lo.ratio > 1.0 or (lo.ratio == 1.0 and v > 0.0):
            outcome = "unbounded"
            witness = "terms grow without bound under the lower envelope"

    prefix = 0.0
    for n in range(horizon + 1):
        prefix = max(prefix, fn(n) * (n + 1.0) ** weight_exponent)
    if bound is not None:
        bound = max(bound, prefix)
    return SeriesVerdict(
        series_id=sid,
        kind="sup",
        power=1.0,
        weight_exponent=weight_exponent,
        n_terms=horizon,
        partial=prefix,
        tail_bound=bound,
        outcome=outcome,
        witness=witness,
    )


# -- support dichotomies -------------------------------------------------------


def _normalized_with_notice(m: MeasureSpec) -> tuple[MeasureSpec, list]:
    mu0 = m.mu0
    if abs(mu0 - 1.0) <= 1e-12:
        return m, []
    return normalize(m), [
        {
            "criterion": "normalization",
            "quantity": mu0,
            "threshold": 1.0,
            "note": "input rescaled to total weighted mass 1; verdicts are scale-invariant",
        }
    ]


def classify_entire(m: MeasureSpec) -> ClassReport:
    """Well-definedness and continuity on all entire functions.

    Holds exactly when the support stays away from 0, equivalently when the
    moment roots mu_n**(1/n) stay bounded; the operator is never compact
    there for a nonzero measure.
    """
    rep = support_report(m)
    ok = rep.inf_support > 0.0
    evidence = [
        {
            "criterion": "entire/support-infimum",
            "quantity": rep.inf_support,
            "threshold": "> 0",
        },
        {
            "criterion": "entire/never-compact",
            "quantity": rep.total_weighted_mass,
            "threshold": "> 0",
            "note": "nonzero averaging operators are never compact on entire functions",
        },
    ]
    if ok:
        evidence.insert(
            1,
            {
                "criterion": "entire/root-moment-bound",
                "quantity": max(rep.total_weighted_mass, 1.0) / rep.inf_support,
                "threshold": "sup_n mu_n^(1/n) <= this",
            },
        )
    return ClassReport(
        question="entire-continuity",
        verdict=Verdict.YES if ok else Verdict.NO,
        evidence=evidence,
    )


def classify_bounded(
    m: MeasureSpec,
    p: float = 2.0,
    q: float | None = None,
    alpha: float = 1.0,
) -> ClassReport:
    """Boundedness on (mixed) Fock spaces: holds iff no mass below 1.

    The verdict is uniform over every exponent pair and weight, covers the
    equal-index spaces and every target with exponent >= the source.
    """
    _check_exponent(p, "p")
    if q is not None:
        _check_exponent(q, "q")
    mn, evidence = _normalized_with_notice(m)
    rep = support_report(mn)
    ok = rep.mass_below_1 == 0.0
    evidence.append(
        {
            "criterion": "bounded/mass-below-1",
            "quantity": rep.mass_below_1,
            "threshold": 0.0,
        }
    )
    evidence.append(
        {
            "criterion": "bounded/uniformity",
            "quantity": rep.mass_below_1,
            "threshold": 0.0,
            "note": "verdict independent of (p, q, alpha); also settles every "
            "source-to-larger-target pair",
        }
    )
    return ClassReport(
        question="fock-bounded",
        verdict=Verdict.YES if ok else Verdict.NO,
        params={"p": p, "q": q if q is not None else p, "alpha": alpha},
        evidence=evidence,
    )


def classify_compact(
    m: MeasureSpec,
    p: float = 2.0,
    q: float | None = None,
    alpha: float = 1.0,
) -> ClassReport:
    """Compactness on (mixed) Fock spaces: holds iff no mass on (0, 1]."""
    _check_exponent(p, "p")
    if q is not None:
        _check_exponent(q, "q")
    mn, evidence = _normalized_with_notice(m)
    rep = support_report(mn)
    ok = rep.mass_unit_interval == 0.0
    evidence.extend(
        [
            {
                "criterion": "compact/mass-unit-interval",
                "quantity": rep.mass_unit_interval,
                "threshold": 0.0,
            },
            {
                "criterion": "compact/mass-at-1",
                "quantity": rep.mass_at_1,
                "threshold": 0.0,
            },
            {
                "criterion": "compact/uniformity",
                "quantity": rep.mass_unit_interval,
                "threshold": 0.0,
                "note": "verdict independent of (p, q, alpha) and of the target exponent",
            },
        ]
    )
    return ClassReport(
        question="compact",
        verdict=Verdict.YES if ok else Verdict.NO,
        params={"p": p, "q": q if q is not None else p, "alpha": alpha},
        evidence=evidence,
    )


@dataclass(frozen=True)
class RadialWeight:
    """A decreasing positive radial profile with its limit-behaviour flags.

    ``monomial_norm_roots_diverge`` declares lim ||u_n||_v**(1/n) = inf;
    ``dilation_ratio_vanishes`` declares lim_{r->inf} v(t r)/v(r) = 0 for
    every t > 1.  Both are hypotheses of the compactness criterion and must
    be declared by the caller; they are never inferred numerically.
    """

    label: str
    rapid_decay: bool = True
    monomial_norm_roots_diverge: bool | None = None
    dilation_ratio_vanishes: bool | None = None


def gauss_weight(alpha: float) -> RadialWeight:
    """The weight exp(-alpha r^2 / 2); satisfies every hypothesis flag."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return RadialWeight(
        label=f"gauss:{alpha:g}",
        rapid_decay=True,
        monomial_norm_roots_diverge=True,
        dilation_ratio_vanishes=True,
    )


def classify_weighted(
    m: MeasureSpec, v: RadialWeight, compactness: bool = True
) -> ClassReport:
    """Boundedness (and optionally compactness) on weighted sup-norm spaces.

    Bounded iff no mass below 1 and mu_0 < inf (the latter holds by
    construction).  Compactness additionally needs no atom at 1 and the
    weight's declared limit hypotheses.
    """
    if not v.rapid_decay:
        raise HypothesisNotDeclared(
            "weight must decay faster than every polynomial (rapid_decay flag)"
        )
    rep = support_report(m)
    bounded = rep.mass_below_1 == 0.0
    evidence = [
        {
            "criterion": "weighted/mass-below-1",
            "quantity": rep.mass_below_1,
            "threshold": 0.0,
        },
        {
            "criterion": "weighted/total-weighted-mass",
            "quantity": rep.total_weighted_mass,
            "threshold": "finite",
        },
    ]
    if compactness:
        if v.monomial_norm_roots_diverge is None or v.dilation_ratio_vanishes is None:
            raise HypothesisNotDeclared(
                "compactness needs the weight flags monomial_norm_roots_diverge "
                "and dilation_ratio_vanishes"
            )
        hyp = v.monomial_norm_roots_diverge and v.dilation_ratio_vanishes
        compact = bounded and hyp and rep.mass_at_1 == 0.0
        evidence.append(
            {
                "criterion": "weighted/compact-mass-at-1",
                "quantity": rep.mass_at_1,
                "threshold": 0.0,
                "outcome": Verdict.YES.value if compact else Verdict.NO.value,
                "note": "hypothesis flags " + ("declared" if hyp else "not satisfied"),
            }
        )
    return ClassReport(
        question="weighted-bounded",
        verdict=Verdict.YES if bounded else Verdict.NO,
        params={"weight": v.label},
        evidence=evidence,
    )


# -- smoothing criteria --------------------------------------------------------


def _suff_nec_verdict(suff: list[SeriesVerdict], nec: list[SeriesVerdict]) -> Verdict:
    if suff and all(s.outcome in ("converges", "bounded") for s in suff):
        return Verdict.SUFFICIENT_HOLDS
    if any(s.outcome in ("diverges", "unbounded") for s in nec):
        return Verdict.NECESSARY_FAILS
    return Verdict.INCONCLUSIVE


def _inv(p: float) -> float:
    return 0.0 if p == INF else 1.0 / p


def _smoothing_catalog(p: float, q: float):
    """Criterion ids applicable to the source exponent q and target p."""
    ip, iq = _inv(p), _inv(q)
    cat = {}
    cat["smoothing/monomial-gap"] = 1.0 <= p and p < q and iq <= 1.0
    cat["smoothing/hilbert-source"] = q == 2.0 and 0.0 < p < 2.0
    cat["smoothing/sup-to-l1"] = q == INF and p == 1.0
    cat["smoothing/dilation-route"] = 1.0 <= p <= 2.0 <= q and p < q
    cat["smoothing/sup-to-lp"] = q == INF and 1.0 <= p <= 2.0
    cat["smoothing/hilbert-to-lp"] = q == 2.0 and 0.0 < p < 2.0
    cat["smoothing/hilbert-chain"] = (q == 2.0 and p == 1.0) or (q == INF and p == 2.0)
    cat["smoothing/l1-to-mixed-sup"] = q == 1.0
    cat["smoothing/to-mixed-hilbert"] = 0.0 < q < 2.0
    return cat


def smoothing_criteria(
    m: MeasureSpec,
    p: float,
    q: float,
    alpha: float = 1.0,
    criteria: list[str] | None = None,
) -> list[ClassReport]:
    """Evaluate the criteria for mapping the exponent-q space into smaller ones.

    p is the target exponent, q the source (p < q for the genuinely
    shrinking questions).  Each applicable criterion produces one report;
    requesting an inapplicable criterion by name raises
    CriterionInapplicable.
    """
    p = _check_exponent(p, "p")
    q = _check_exponent(q, "q")
    mn, notice = _normalized_with_notice(m)
    op = HausdorffOperator(mn)
    catalog = _smoothing_catalog(p, q)
    if criteria is None:
        selected = [cid for cid, ok in catalog.items() if ok]
    else:
        for cid in criteria:
            if cid not in catalog:
                raise CriterionInapplicable(f"unknown criterion {cid!r}")
            if not catalog[cid]:
                raise CriterionInapplicable(
                    f"{cid} does not cover target p={p:g}, source q={q:g}"
                )
        selected = list(criteria)

    ip, iq = _inv(p), _inv(q)
    reports = []
    for cid in selected:
        suff: list[SeriesVerdict] = []
        nec: list[SeriesVerdict] = []
        params = {"p": p, "q": q, "alpha": alpha, "criterion": cid}
        extra_evidence: list[dict] = []

        if cid == "smoothing/monomial-gap":
            e = 0.5 * (ip - iq)
            suff.append(series_verdict(op, weight_exponent=e, power=1.0))
            nec.append(sup_verdict(op, weight_exponent=e))
        elif cid == "smoothing/hilbert-source":
            g = min(p, 1.0)
            u = 2.0 * g / (2.0 - g)
            w = g * (2.0 - p) / (2.0 * p * (2.0 - g))
            suff.append(series_verdict(op, weight_exponent=w, power=u))
            nec.append(sup_verdict(op, weight_exponent=(2.0 - p) / (4.0 * p)))
        elif cid == "smoothing/sup-to-l1":
            suff.append(series_verdict(op, weight_exponent=0.0, power=1.0))
            nec.append(series_verdict(op, weight_exponent=-0.5, power=1.0))
        elif cid == "smoothing/dilation-route":
            gamma = ip - iq
            try:
                integral, _ = mn.weighted_mass(2.0 * iq)
                integral_ok = math.isfinite(integral)
            except DivergentMoment:
                integral, integral_ok = math.inf, False
            extra_evidence.append(
                {
                    "criterion": "smoothing/dilation-route/source-power-mass",
                    "quantity": integral,
                    "threshold": "finite",
                }
            )
            ser = series_verdict(op, weight_exponent=gamma - 1.0, power=1.0)
            suff.append(ser)
            if integral_ok != (ser.outcome == "converges") and (
                integral_ok or ser.outcome == "converges"
            ):
                extra_evidence.append(
                    {
                        "criterion": "smoothing/dilation-route/partial-sufficient",
                        "quantity": integral,
                        "threshold": "both parts must certify",
                        "note": "only one of the two sufficient conditions certifies",
                    }
                )
            if not integral_ok:
                suff.append(
                    SeriesVerdict(
                        series_id="smoothing/dilation-route/source-power-mass",
                        kind="series",
                        power=1.0,
                        weight_exponent=2.0 * iq,
                        n_terms=0,
                        partial=integral,
                        tail_bound=None,
                        outcome="diverges",
                        witness="integral of t^(2/q - 1) against the measure diverges",
                    )
                )
            nec.append(
                series_verdict(op, weight_exponent=-0.5, power=1.0 / gamma)
            )
        elif cid == "smoothing/sup-to-lp":
            suff.append(series_verdict(op, weight_exponent=ip - 1.0, power=1.0))
            nec.append(series_verdict(op, weight_exponent=-0.5, power=p))
        elif cid == "smoothing/hilbert-to-lp":
            g = 2.0 * p / (2.0 - p)
            suff.append(series_verdict(op, weight_exponent=0.5, power=g))
            nec.append(series_verdict(op, weight_exponent=0.0, power=g))
        elif cid == "smoothing/hilbert-chain":
            suff.append(series_verdict(op, weight_exponent=0.5, power=2.0))
            nec.append(series_verdict(op, weight_exponent=0.0, power=2.0))
        elif cid == "smoothing/l1-to-mixed-sup":
            sv = sup_verdict(op, weight_exponent=0.5)
            verdict = {
                "bounded": Verdict.YES,
                "unbounded": Verdict.NO,
                "unknown": Verdict.INCONCLUSIVE,
            }[sv.outcome]
            reports.append(
                ClassReport(
                    question="smoothing",
                    verdict=verdict,
                    params={**params, "target": "mixed(inf,1)"},
                    evidence=notice + [sv.as_dict()] + extra_evidence,
                )
            )
            continue
        elif cid == "smoothing/to-mixed-hilbert":
            suff.append(sup_verdict(op, weight_exponent=(2.0 - q) / (2.0 * q)))
            nec.append(sup_verdict(op, weight_exponent=(2.0 - q) / (4.0 * q)))
            params["target"] = "mixed(2,q)"

        verdict = _suff_nec_verdict(suff, nec)
        evidence = notice + [s.as_dict() | {"role": "sufficient"} for s in suff]
        evidence += [s.as_dict() | {"role": "necessary"} for s in nec]
        evidence += extra_evidence
        reports.append(
            ClassReport(
                question="smoothing", verdict=verdict, params=params, evidence=evidence
            )
        )
    return reports


# -- summing criteria ------------------------------------------------------------


def _summing_catalog(p: float, q: float):
    cat = {}
    cat["summing/absolutely-summing-iff"] = True
    cat["summing/nuclear-chain"] = True
    cat["summing/p-nuclear-small"] = 1.0 < p <= q <= 2.0
    cat["summing/p-nuclear-large"] = q != INF and max(p, 2.0) <= q
    cat["summing/summing-small-p"] = 1.0 <= p <= 2.0
    cat["summing/summing-large-q"] = q != INF and q > 2.0
    cat["summing/p-summing-dual-suff"] = 1.0 <= p <= 2.0
    cat["summing/p-summing-dual-nec"] = 1.0 <= p <= 2.0
    cat["summing/cotype-21"] = 1.0 <= p <= 2.0
    return cat


def summing_criteria(
    m: MeasureSpec,
    p: float = 1.0,
    q: float = 2.0,
    criteria: list[str] | None = None,
) -> list[ClassReport]:
    """Summing/nuclearity conditions expressed through the moment series."""
    p = _check_exponent(p, "p")
    q = _check_exponent(q, "q")
    mn, notice = _normalized_with_notice(m)
    op = HausdorffOperator(mn)
    catalog = _summing_catalog(p, q)
    if criteria is None:
        selected = [cid for cid, ok in catalog.items() if ok]
    else:
        for cid in criteria:
            if cid not in catalog:
                raise CriterionInapplicable(f"unknown criterion {cid!r}")
            if not catalog[cid]:
                raise CriterionInapplicable(f"{cid} does not cover p={p:g}, q={q:g}")
        selected = list(criteria)

    reports = []
    for cid in selected:
        params = {"p": p, "q": q, "criterion": cid}
        suff: list[SeriesVerdict] = []
        nec: list[SeriesVerdict] = []
        if cid == "summing/absolutely-summing-iff":
            sv = series_verdict(op, weight_exponent=0.0, power=1.0)
            verdict = {
                "converges": Verdict.YES,
                "diverges": Verdict.NO,
                "unknown": Verdict.INCONCLUSIVE,
            }[sv.outcome]
            reports.append(
                ClassReport(
                    question="summing",
                    verdict=verdict,
                    params=params,
                    evidence=notice + [sv.as_dict()],
                )
            )
            continue
        if cid == "summing/nuclear-chain":
            suff.append(series_verdict(op, weight_exponent=0.0, power=1.0))
            nec.append(series_verdict(op, weight_exponent=-0.5, power=1.0))
        elif cid == "summing/p-nuclear-small":
            suff.append(series_verdict(op, weight_exponent=0.0, power=p))
        elif cid == "summing/p-nuclear-large":
            suff.append(
                series_verdict(op, weight_exponent=p * (0.5 - 1.0 / q), power=p)
            )
        elif cid == "summing/summing-small-p":
            nec.append(
                series_verdict(op, weight_exponent=1.0 / p - 0.5, power=2.0)
            )
        elif cid == "summing/summing-large-q":
            nec.append(
                series_verdict(op, weight_exponent=0.5 * (1.0 - q / 2.0), power=q)
            )
        elif cid == "summing/p-summing-dual-suff":
            suff.append(
                series_verdict(op, weight_exponent=(2.0 - p) / 2.0, power=p)
            )
        elif cid == "summing/p-summing-dual-nec":
            nec.append(
                series_verdict(op, weight_exponent=(p - 2.0) / 2.0, power=p)
            )
        elif cid == "summing/cotype-21":
            suff.append(sup_verdict(op, weight_exponent=0.0))

        verdict = _suff_nec_verdict(suff, nec)
        evidence = notice + [s.as_dict() | {"role": "sufficient"} for s in suff]
        evidence += [s.as_dict() | {"role": "necessary"} for s in nec]
        reports.append(
            ClassReport(
                question="summing", verdict=verdict, params=params, evidence=evidence
            )
        )
    return reports
