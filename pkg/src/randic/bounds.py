"""Upper bounds on the Randić energy and an aggregate checker.

Each bound is a plain function. :func:`check_all` evaluates every bound
whose hypotheses hold for a graph and records value, margin and verdict in
a :class:`BoundReport`; bounds whose hypotheses fail are listed as not
applicable rather than raising.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import tb
from .closed_forms import sun_energy
from .graph import (
    Graph,
    bipartition,
    has_suspended_path,
    is_connected,
    is_TB,
    is_tree,
    matching_number,
    to_graph6,
)
from .spectra import (
    IsolatedVertexError,
    KnownEigs,
    block_traces_exact,
    Spectrum,
    randic_index_minus1_exact,
    randic_spectrum,
    trace_R2_exact,
)

__all__ = [
    "MARGIN_TOL",
    "RADICAND_TOL",
    "BoundEntry",
    "BoundReport",
    "bound_trace",
    "bound_known_eigs",
    "bound_corollary34",
    "r1_upper",
    "bound_general_by_r1",
    "r1_energy_bounds",
    "bound_trees_parity",
    "bound_das",
    "compare_parity_vs_das",
    "nullity_threshold",
    "sun_form_bound",
    "bound_no_suspended",
    "check_all",
]

MARGIN_TOL = 1e-9
RADICAND_TOL = 1e-12
HALF_SQRT2 = math.sqrt(2.0) / 2


class RadicandError(ArithmeticError):
    pass


def _root(x: float) -> tuple[float, bool]:
    """sqrt with floating-noise clamping; returns (value, clamped)."""
    if x >= 0:
        return math.sqrt(x), False
    if x >= -RADICAND_TOL:
        return 0.0, True
    raise RadicandError(f"negative radicand {x:.3e}")


def _connected_n3(g: Graph) -> None:
    if g.n < 3:
        raise ValueError(f"bound needs n >= 3, got n={g.n}")
    if not is_connected(g):
        raise ValueError("bound needs a connected graph")


def _exact_nullity(g: Graph, spectrum: Optional[Spectrum] = None) -> int:
    if is_tree(g):
        return g.n - 2 * matching_number(g)
    spectrum = randic_spectrum(g) if spectrum is None else spectrum
    return spectrum.count_near(0.0)


# --- trace-based bounds -----------------------------------------------------


def bound_trace(g: Graph) -> float:
    """sqrt(n tr R^2), for graphs without isolated vertices."""
    if 0 in g.degrees:
        raise IsolatedVertexError("trace bound needs a graph without isolated vertices")
    return math.sqrt(g.n * trace_R2_exact(g))


def bound_known_eigs(g: Graph, psi: KnownEigs | Sequence[float], spectrum: Optional[Spectrum] = None) -> float:
    """Trace bound sharpened by a sub-multiset ``psi`` of known R-eigenvalues."""
    psi = psi if isinstance(psi, KnownEigs) else KnownEigs(tuple(psi))
    spectrum = randic_spectrum(g) if spectrum is None else spectrum
    psi.validate(spectrum)
    rest = float(trace_R2_exact(g)) - sum(x * x for x in psi.values)
    root, _ = _root((g.n - len(psi)) * rest)
    return root + sum(abs(x) for x in psi.values)


def _cor34(g: Graph, null: int, bipartite: bool) -> tuple[float, bool]:
    k = 2 if bipartite else 1
    rad = (g.n - k - null) * (trace_R2_exact(g) - k)
    root, clamped = _root(float(rad))
    return root + k, clamped


def bound_corollary34(g: Graph, null: Optional[int] = None) -> float:
    """Trace bound with the eigenvalue 1 (and -1 if bipartite) and the null space removed."""
    if g.m == 0 or not is_connected(g):
        raise ValueError("bound needs a connected graph with at least one edge")
    null = _exact_nullity(g) if null is None else null
    return _cor34(g, null, bipartition(g) is not None)[0]


# --- bounds through R_{-1} --------------------------------------------------


def r1_upper(g: Graph) -> tuple[Fraction, str]:
    """Tightest published upper bound on R_{-1}(g) and the name of its source."""
    _connected_n3(g)
    n = g.n
    options = [(Fraction(15 * (n + 1), 56), "connected")]
    if is_tree(g):
        options.append((Fraction(5 * n + 8, 18), "tree"))
        if n >= 103:
            options.append((Fraction(15 * n - 1, 56), "tree_n103"))
    return min(options)


def r1_energy_bounds(g: Graph, null: Optional[int] = None) -> dict[str, float]:
    """Every applicable energy bound obtained from an R_{-1} bound."""
    _connected_n3(g)
    n = g.n
    null = _exact_nullity(g) if null is None else null
    out = {"general": math.sqrt(max(n - 1 - null, 0) * (15 * n - 13) / 28) + 1}
    if bipartition(g) is not None:
        out["bipartite"] = math.sqrt(max(n - 2 - null, 0) * (15 * n - 41) / 28) + 2
    if is_tree(g):
        out["tree"] = math.sqrt(max(n - 2 - null, 0) * (5 * n - 10) / 9) + 2
        if n >= 103:
            out["tree_n103"] = math.sqrt(max(n - 2 - null, 0) * (15 * n - 57) / 28) + 2
    return out


def bound_general_by_r1(g: Graph, null: Optional[int] = None) -> float:
    """The most specific R_{-1}-based energy bound (tree, then bipartite, then general)."""
    found = r1_energy_bounds(g, null)
    if "tree" in found:
        return min(found["tree"], found.get("tree_n103", math.inf))
    return found.get("bipartite", found["general"])


def bound_trees_parity(n: int, parity_aware: bool = True) -> float:
    """Tree bound with nullity 0 (even n) or 1 (odd n) plugged in.

    With ``parity_aware=False`` the nullity is taken as 0 for every n.
    For n >= 103 the smaller of the two available forms is returned.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    head = n - 3 if (parity_aware and n % 2) else n - 2
    value = math.sqrt(head * (5 * n - 10) / 9) + 2
    if n >= 103:
        value = min(value, math.sqrt(head * (15 * n - 57) / 28) + 2)
    return value


def bound_das(n: int) -> float:
    """2 sqrt(floor(n/2) (5n + 8)/18), the Das et al. tree bound."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 2 * math.sqrt((n // 2) * (5 * n + 8) / 18)


def compare_parity_vs_das(n: int) -> str:
    """``"equal"``, ``"parity_smaller"`` or ``"das_smaller"``."""
    parity, das = bound_trees_parity(n), bound_das(n)
    if math.isclose(parity, das, rel_tol=1e-12, abs_tol=1e-12):
        return "equal"
    return "parity_smaller" if parity < das else "das_smaller"


def nullity_threshold(n: int, tree: bool = False) -> float:
    """Nullity above which RE <= (n - 3) sqrt(2)/2 + 2 follows."""
    if tree:
        if n < 4:
            raise ValueError(f"tree threshold needs n >= 4, got {n}")
        return (n * n - 3 * n - 12) / (15 * n - 57)
    if n < 3:
        raise ValueError(f"threshold needs n >= 3, got {n}")
    return (n * n + 56 * n - 141 - 28 * (n - 3) * math.sqrt(2)) / (15 * n - 13)


def sun_form_bound(n: int) -> float:
    return (n - 3) * HALF_SQRT2 + 2


def bound_no_suspended(g: Graph, null: Optional[int] = None) -> float:
    """Energy bound for connected graphs without suspended paths.

    Also asserts R_{-1}(g) <= n/4, the index bound these rely on.
    """
    _connected_n3(g)
    if has_suspended_path(g):
        raise ValueError("graph has a suspended path; bound not applicable")
    n = g.n
    if randic_index_minus1_exact(g) > Fraction(n, 4):
        raise AssertionError("R_{-1} exceeds n/4 on a graph without suspended paths")
    if bipartition(g) is not None:
        root, _ = _root(float((n - 2) * (n - 4)))
        return root * HALF_SQRT2 + 2
    null = _exact_nullity(g) if null is None else null
    return math.sqrt(max(n - 1 - null, 0)) * math.sqrt(n - 2) * HALF_SQRT2 + 1


# --- aggregate report -------------------------------------------------------


@dataclass
class BoundEntry:
    """One bound evaluated on one graph.

    ``observed`` is the bounded quantity (``quantity`` names it, normally
    RE). Upper bounds have ``margin = value - observed``, lower bounds
    ``observed - value``; ``holds`` means ``margin >= -MARGIN_TOL``, or the
    exact rational comparison when ``exact_holds`` is set.
    """

    name: str
    applicable: bool
    value: Optional[float] = None
    observed: Optional[float] = None
    quantity: str = "RE"
    sense: str = "upper"
    exact_holds: Optional[bool] = None  # verdict from rational arithmetic
    degenerate: bool = False
    reason: str = ""

    @property
    def margin(self) -> Optional[float]:
        if not self.applicable:
            return None
        if self.sense == "upper":
            return self.value - self.observed
        return self.observed - self.value

    @property
    def holds(self) -> Optional[bool]:
        if not self.applicable:
            return None
        if self.exact_holds is not None:
            return self.exact_holds
        return self.margin >= -MARGIN_TOL

    def as_dict(self) -> dict:
        d = asdict(self)
        d["margin"] = self.margin
        d["holds"] = self.holds
        return d


@dataclass
class BoundReport:
    graph6: str
    n: int
    RE: float
    nullity: int
    bipartite: bool
    tree: bool
    entries: list[BoundEntry] = field(default_factory=list)

    @property
    def applicable(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable]

    @property
    def violations(self) -> list[BoundEntry]:
        return [e for e in self.applicable if not e.holds]

    @property
    def all_hold(self) -> bool:
        return not self.violations

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "RE": self.RE,
            "nullity": self.nullity,
            "bipartite": self.bipartite,
            "tree": self.tree,
            "all_hold": self.all_hold,
            "entries": [e.as_dict() for e in self.entries],
        }


def _skip(name: str, reason: str, quantity: str = "RE") -> BoundEntry:
    return BoundEntry(name, False, quantity=quantity, reason=reason)


def check_all(g: Graph, spectrum: Optional[Spectrum] = None) -> BoundReport:
    """Evaluate every bound on a connected graph."""
    if not is_connected(g):
        raise ValueError("bounds are stated for connected graphs; input is disconnected")
    n = g.n
    spectrum = randic_spectrum(g) if spectrum is None else spectrum
    re = spectrum.energy()
    null = _exact_nullity(g, spectrum)
    bip = bipartition(g) is not None
    tree = is_tree(g)
    has_edge = g.m > 0
    suspended = has_suspended_path(g)
    r1 = randic_index_minus1_exact(g)
    report = BoundReport(to_graph6(g), n, re, null, bip, tree)
    add = report.entries.append

    def upper(name, value, degenerate=False, **kw):
        add(BoundEntry(name, True, float(value), kw.pop("observed", re), degenerate=degenerate, **kw))

    def r1_entry(name, bound: Fraction):
        add(BoundEntry(name, True, float(bound), float(r1), quantity="R_-1", exact_holds=r1 <= bound))

    if has_edge:
        upper("trace", bound_trace(g))
        upper("known_eigs:{1}", bound_known_eigs(g, [1.0], spectrum))
        upper("cor34:general", *_cor34(g, null, False))
    else:
        for name in ("trace", "known_eigs:{1}", "cor34:general"):
            add(_skip(name, "isolated vertex"))
    if has_edge and bip:
        upper("known_eigs:{1,-1}", bound_known_eigs(g, [1.0, -1.0], spectrum))
        upper("cor34:bipartite", *_cor34(g, null, True))
    else:
        for name in ("known_eigs:{1,-1}", "cor34:bipartite"):
            add(_skip(name, "not bipartite" if has_edge else "isolated vertex"))

    if n >= 3:
        r1_entry("r1_index:connected", Fraction(15 * (n + 1), 56))
        found = r1_energy_bounds(g, null)
        for key in ("general", "bipartite", "tree", "tree_n103"):
            if key in found:
                upper(f"r1:{key}", found[key])
            else:
                add(_skip(f"r1:{key}", f"hypothesis '{key}' fails"))
        thr = nullity_threshold(n)
        if null >= thr:
            upper("nullbound:general", sun_form_bound(n))
        else:
            add(_skip("nullbound:general", f"nullity {null} < threshold {thr:.4f}"))
    else:
        add(_skip("r1_index:connected", "n < 3", "R_-1"))
        for name in ("r1:general", "r1:bipartite", "r1:tree", "r1:tree_n103", "nullbound:general"):
            add(_skip(name, "n < 3"))

    if tree and n >= 3:
        r1_entry("r1_index:tree", Fraction(5 * n + 8, 18))
    else:
        add(_skip("r1_index:tree", "not a tree with n >= 3", "R_-1"))
    if tree and n >= 103:
        r1_entry("r1_index:tree_n103", Fraction(15 * n - 1, 56))
        thr = nullity_threshold(n, tree=True)
        if null >= thr:
            upper("nullbound:tree", sun_form_bound(n))
        else:
            add(_skip("nullbound:tree", f"nullity {null} < threshold {thr:.4f}"))
    else:
        add(_skip("r1_index:tree_n103", "not a tree with n >= 103", "R_-1"))
        add(_skip("nullbound:tree", "not a tree with n >= 103"))

    if tree and n >= 2:
        upper("parity:tree", bound_trees_parity(n))
        upper("das:tree", bound_das(n))
    else:
        add(_skip("parity:tree", "not a tree"))
        add(_skip("das:tree", "not a tree"))

    if n >= 3 and not suspended:
        r1_entry("r1_index:no_suspended", Fraction(n, 4))
        if bip:
            upper("no_suspended:bipartite", bound_no_suspended(g, null))
            if n % 2:
                upper("no_suspended:sun", sun_energy((n - 1) // 2))
            else:
                add(_skip("no_suspended:sun", "even order"))
            add(_skip("no_suspended:general", "bipartite form used"))
        else:
            add(_skip("no_suspended:bipartite", "not bipartite"))
            add(_skip("no_suspended:sun", "not bipartite"))
            upper("no_suspended:general", bound_no_suspended(g, null))
    else:
        why = "n < 3" if n < 3 else "has a suspended path"
        add(_skip("r1_index:no_suspended", why, "R_-1"))
        for name in ("no_suspended:bipartite", "no_suspended:general", "no_suspended:sun"):
            add(_skip(name, why))

    report.entries.extend(_tb_entries(g, re, null))
    return report


_TB_NAMES = (
    ("tb:diag_lower", "min(R2_aa - 1/2)"),
    ("tb:diag_upper", "min(upper - R2_aa)"),
    ("tb:trace_RA2", "trRA2"),
    ("tb:trace_R2", "trR2"),
    ("tb:block_traces", "trRA2-trRB2"),
    ("tb:energy", "RE"),
    ("tb:energy_nullity_free", "RE"),
    ("tb:energy_sun_form", "RE"),
    ("tb:odd_vs_sun", "RE"),
)


def _tb_entries(g: Graph, re: float, null: int) -> list[BoundEntry]:
    part = is_TB(g)
    if part is None or g.n < 3:
        why = "not TB" if part is None else "n < 3"
        return [_skip(name, why, q) for name, q in _TB_NAMES]
    d = tb.tb_decompose(g, part)
    diag = tb.diag_R2_A(g, d)
    lower_gap = min(v - Fraction(1, 2) for v in diag.values())
    upper_gap = min(
        tb.diag_R2_A_bounds(sum(1 for b in g.adjacency[a] if b in d.b1))[1] - v for a, v in diag.items()
    )
    tra, tra_bound = tb.trace_RA2_bound(g, d)
    tr2, tr2_bound = tb.trace_R2_tb_bound(g, d)
    ta, tbb = block_traces_exact(g, d.bipartition)
    energy = tb.tb_energy_bound(g, null)
    out = [
        # per-vertex checks summarised by the worst slack over A
        BoundEntry("tb:diag_lower", True, 0.0, float(lower_gap), "min(R2_aa - 1/2)", "lower", exact_holds=lower_gap >= 0),
        BoundEntry("tb:diag_upper", True, 0.0, float(upper_gap), "min(upper - R2_aa)", "lower", exact_holds=upper_gap >= 0),
        BoundEntry("tb:trace_RA2", True, float(tra_bound), float(tra), "trRA2", exact_holds=tra <= tra_bound),
        BoundEntry("tb:trace_R2", True, float(tr2_bound), float(tr2), "trR2", exact_holds=tr2 <= tr2_bound),
        BoundEntry("tb:block_traces", True, 0.0, float(abs(ta - tbb)), "trRA2-trRB2", exact_holds=ta == tbb),
        BoundEntry("tb:energy", True, energy.value, re, degenerate=energy.degenerate),
        BoundEntry("tb:energy_nullity_free", True, energy.nullity_free, re),
    ]
    if energy.sun_form is not None:
        out.append(BoundEntry("tb:energy_sun_form", True, energy.sun_form, re))
    else:
        out.append(_skip("tb:energy_sun_form", "nullity 0"))
    if g.n % 2:
        out.append(BoundEntry("tb:odd_vs_sun", True, sun_energy((g.n - 1) // 2), re))
    else:
        out.append(_skip("tb:odd_vs_sun", "even order"))
    return out
