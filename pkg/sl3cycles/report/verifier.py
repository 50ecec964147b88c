from __future__ import annotations

import logging
import random
import xml.etree.ElementTree as ElementTree
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import inject

from sl3cycles.architecture.event_sender import EventSender
from sl3cycles.architecture.profiler import Stopwatch
from sl3cycles.control.cocycle import (
    boundary,
    displayed_sigma_hat,
    four_loop,
    phi,
    random_cycle,
    random_rational,
    shift_chain,
    sigma_hat,
)
from sl3cycles.control.links import (
    descending_link,
    descending_path,
    descending_two_cells,
    quotient_descending_link,
    star_meets_midpoint,
)
from sl3cycles.control.morse import MorseTable, flat_edges, hhat_sq, is_morse, morse_table
from sl3cycles.control.pairing import PairingMatrix, pairing_matrix
from sl3cycles.model.apartment import (
    X0,
    Cell,
    Midpoint,
    SectorWindow,
    Vertex,
    chambers_above_below_eta,
    eta,
    eta_endpoints,
    subdivide,
    y,
)
from sl3cycles.model.poly import Poly
from sl3cycles.model.stabilizer import (
    edge_profile,
    enumerate_generators,
    membership,
    oracle_stabilizes,
    sample_member,
    sample_violation,
    vertex_profile,
)
from sl3cycles.model.unipotent import Unipotent
from sl3cycles.report import reporter
from sl3cycles.report.incidents import drain, environment
from sl3cycles.report.status import CheckStatus
from sl3cycles.report.verification_report import LemmaResult, VerificationReport
from sl3cycles.settings import DEFAULT_SAMPLES, ApplicationSettings, require_capacity
from sl3cycles.ui.svg_renderer import parse_edge_label, render_sector

log = logging.getLogger("verifier")

STABILIZER_RADIUS = 10
LINK_RADIUS = 12
RENDER_RADIUS = 9
LABEL_PAIRS = 1000
KERNEL_SAMPLES = 100
SPLIT_SAMPLES = 200
LOOP_SAMPLES = 500
SHIFT_SAMPLES = 200
BIPARTITE_SAMPLE = tuple(Fraction(v) for v in ("-1", "0", "1/2", "1", "2", "3"))


@dataclass
class SuiteContext:
    i_max: int
    n_max: int
    samples: int
    rng: random.Random
    table: MorseTable
    pairing: Optional[PairingMatrix] = None


@dataclass
class SuiteOutcome:
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def check(self, condition: bool, failure: str):
        self.checks += 1
        if not condition:
            self.failures.append(failure)


def random_poly(rng: random.Random, degree: int) -> Poly:
    return Poly(random_rational(rng, 5) for _ in range(rng.randint(0, degree + 1)))


def random_unipotent(rng: random.Random, degree: int) -> Unipotent:
    x, y = random_poly(rng, degree), random_poly(rng, degree)
    return Unipotent(x, y, random_poly(rng, 2 * degree))


def _stabilizer_oracle(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    for vertex in SectorWindow(min(STABILIZER_RADIUS, context.i_max)).vertices():
        profile = vertex_profile(vertex)
        for k in range(context.samples):
            planted = k % 2 == 1
            sample = sample_violation if planted else sample_member
            gamma = sample(context.rng, profile)
            by_profile = membership(gamma, profile)
            by_oracle = oracle_stabilizes(gamma, vertex)
            outcome.check(
                by_profile == by_oracle and by_profile != planted,
                f"{vertex}: profile says {by_profile}, oracle says {by_oracle} for {gamma}",
            )
    return outcome


def _stabilizer_generators(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    for vertex in SectorWindow(min(STABILIZER_RADIUS, context.i_max)).vertices():
        profile = vertex_profile(vertex)
        for generator in enumerate_generators(profile):
            outcome.check(
                membership(generator, profile) and oracle_stabilizes(generator, vertex),
                f"generator {generator} does not fix {vertex}",
            )
    return outcome


def _edge_stabilizer(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    for n in range(context.n_max + 1):
        expected = (n, n, 2 * n + 1)
        outcome.check(
            edge_profile(eta(n)).upper() == expected, f"edge profile of eta_{n} is not {expected}"
        )
        outcome.check(
            edge_profile(Cell.point(y(n))) == edge_profile(eta(n)),
            f"midpoint y_{n} and eta_{n} differ in profile",
        )
    return outcome


def _flat_edges(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    window = context.table.window
    expected = [eta(n) for n in range(context.i_max) if 2 * n + 2 <= context.i_max]
    found = flat_edges(window)
    outcome.check(set(found) == set(expected), f"flat edges {found} differ from {expected}")

    for chamber in window.chambers():
        outcome.check(
            len({hhat_sq(v) for v in chamber.vertices}) > 1,
            f"{chamber} has constant height on all vertices",
        )
    return outcome


def _morse_property(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    table = context.table
    outcome.check(is_morse(table), "height is not a Morse function on the subdivided window")
    outcome.check(table.h(X0) == 0, "standard vertex is not the minimum")

    for n in range(context.i_max):
        if 2 * n + 3 > context.i_max:
            break
        a, b = eta_endpoints(n)
        upper_a, upper_b = eta_endpoints(n + 1)
        outcome.check(
            max(table.h(a), table.h(b)) < table.h(y(n)) < min(table.h(upper_a), table.h(upper_b)),
            f"y_{n} is not sandwiched between the flat edges {n} and {n + 1}",
        )

    a, _ = eta_endpoints(0)
    flattened = table.with_value(y(0), table.h(a))
    outcome.check(not is_morse(flattened), "a flattened midpoint was not detected")
    return outcome


def _link_vertices(context: SuiteContext) -> list[Vertex]:
    radius = min(LINK_RADIUS, context.i_max - 1)
    window = SectorWindow(radius)
    return [v for v in window.vertices() if v != X0] + list(window.midpoints())


def _descending_links(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    table = context.table
    for vertex in _link_vertices(context):
        lower = descending_link(vertex, table, apartment=True)
        outcome.check(lower.is_connected(), f"descending link of {vertex} is empty or disconnected")
        edges = len(lower.edges)
        outcome.check(edges <= 2, f"descending link of {vertex} has {edges} edges")
        if not isinstance(vertex, Midpoint) and star_meets_midpoint(vertex, table, apartment=True):
            count = len(descending_two_cells(vertex, table, apartment=True))
            outcome.check(count <= 1, f"{vertex} next to a midpoint has {count} descending 2-cells")

    n = 0
    while 2 * n + 2 <= min(LINK_RADIUS, context.i_max - 1):
        lower = descending_link(y(n), table, apartment=True)
        edges = len(lower.edges)
        outcome.check(edges == 2, f"descending link of y_{n} has {edges} edges")
        _, below = chambers_above_below_eta(n)
        two_cells = set(descending_two_cells(y(n), table))
        outcome.check(
            two_cells == {subdivide(below)}, f"descending star of y_{n} is not the lower chamber"
        )
        n += 1
    return outcome


def _descending_paths(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    table = context.table
    for vertex in _link_vertices(context):
        path = descending_path(vertex, table)
        heights = [table.h(vertex)] + [table.h(step) for step in path]
        descends = all(a > b for a, b in zip(heights, heights[1:]))
        outcome.check(descends, f"path from {vertex} does not descend")
        outcome.check(len(path) <= table.h(vertex), f"path from {vertex} is longer than its height")
    return outcome


def _label_homomorphism(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    rng = context.rng
    for _ in range(LABEL_PAIRS):
        n = rng.randint(0, context.n_max)
        u, v = random_unipotent(rng, 2 * n + 2), random_unipotent(rng, 2 * n + 2)
        lu, lv, luv = u.label(n), v.label(n), (u * v).label(n)
        outcome.check(luv == (lu[0] + lv[0], lu[1] + lv[1]), f"label is not additive on {u}, {v}")

    for _ in range(KERNEL_SAMPLES):
        n = rng.randint(0, context.n_max)
        shift = Poly.monomial(1, n + 1)
        u = random_unipotent(rng, n + 2)
        kernel_element = Unipotent(u.x * shift, u.y * shift, u.z * shift)
        outcome.check(
            kernel_element.label(n) == (0, 0), f"label does not vanish on {kernel_element}"
        )

    for n in range(context.n_max + 1):
        edges = quotient_descending_link(n, BIPARTITE_SAMPLE)
        outcome.check(
            len(edges) == len(BIPARTITE_SAMPLE) ** 2,
            f"quotient link sample at n = {n} has {len(edges)} edges",
        )
    return outcome


def _congruence_split(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    rng = context.rng
    for _ in range(SPLIT_SAMPLES):
        n = rng.randint(0, context.n_max)
        u = random_unipotent(rng, 2 * n + 3)
        u1, u2 = u.congruence_split(n)
        outcome.check(u1 * u2 == u, f"factors of {u} do not multiply back")
        outcome.check(u1.in_congruence_subgroup(n), f"first factor of {u} is not congruent to 1")
        outcome.check(
            all(entry.degree <= n for entry in (u2.x, u2.y, u2.z)),
            f"second factor of {u} does not fix z_{n}",
        )
    return outcome


def _local_cocycle(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    rng = context.rng
    for n in range(context.n_max + 1):
        chain = sigma_hat(n)
        outcome.check(phi(chain) == -2, f"phi of the projected cycle {n} is {phi(chain)}")
        outcome.check(
            boundary(chain).is_zero(), f"projected cycle {n} has boundary {boundary(chain)}"
        )

    for _ in range(LOOP_SAMPLES):
        q1, r1, q2, r2 = (random_rational(rng) for _ in range(4))
        loop = four_loop(q1, r1, q2, r2)
        outcome.check(phi(loop) == (q1 - q2) * (r1 - r2), f"4-loop {loop} has the wrong value")

    for _ in range(SHIFT_SAMPLES):
        cycle = random_cycle(rng)
        a, b = random_rational(rng), random_rational(rng)
        outcome.check(boundary(cycle).is_zero(), f"random cycle {cycle} is not closed")
        outcome.check(
            phi(shift_chain(cycle, a, b)) == phi(cycle), f"phi is not shift invariant on {cycle}"
        )
    return outcome


def _displayed_cycle(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    displayed = displayed_sigma_hat()
    outcome.check(phi(displayed) == -2, f"printed chain evaluates to {phi(displayed)}")
    if not boundary(displayed).is_zero():
        outcome.flags.append(
            f"printed seven-term chain has boundary {boundary(displayed)}; "
            f"the projection of the cycle gives {sigma_hat(1)} with the sign of eta(-1,0) reversed"
        )
    return outcome


def _commutator_identity(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    for n in range(context.n_max + 1):
        u1 = Unipotent.e12(Poly.monomial(1, n))
        u2 = Unipotent.e23(Poly.monomial(1, n))
        left, right = u1.inverse().commutator(u2), u1.commutator(u2.inverse())
        outcome.check(left == right, f"commutators differ in U at n = {n}")
        expected = Unipotent.e13(Poly.monomial(-1, 2 * n))
        outcome.check(left == expected, f"commutator at n = {n} is {left}")
        outcome.check(
            u1.mod(n).inverse().commutator(u2.mod(n)) == u1.mod(n).commutator(u2.mod(n).inverse()),
            f"commutators differ modulo t^{n + 1}",
        )
    return outcome


def _pairing(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    matrix = pairing_matrix(context.n_max, context.table)
    context.pairing = matrix

    outcome.check(all(value == -2 for value in matrix.diagonal), f"diagonal is {matrix.diagonal}")
    outcome.check(matrix.is_upper_triangular(), "entries with m > n do not vanish")
    outcome.check(matrix.rank() == context.n_max + 1, f"rank is {matrix.rank()}")

    extrapolated = [c for c in matrix.certificates if c.extrapolated]
    if extrapolated:
        outcome.flags.append(
            f"{len(extrapolated)} entries with m < n are certified by disjoint support only, "
            "which goes beyond the triangularity argument"
        )
    return outcome


def _rendering(context: SuiteContext) -> SuiteOutcome:
    outcome = SuiteOutcome()
    window = SectorWindow(min(RENDER_RADIUS, context.i_max))
    document = ElementTree.fromstring(render_sector(window).encode())
    highlighted = {
        parse_edge_label(element.get("data-edge"))
        for element in document.iter("{http://www.w3.org/2000/svg}line")
        if element.get("class") == "flat"
    }
    outcome.check(
        highlighted == set(flat_edges(window)),
        f"highlighted edges {highlighted} differ from the census",
    )
    return outcome


SUITES: tuple[tuple[str, str, Callable[[SuiteContext], SuiteOutcome]], ...] = (
    ("stabilizer-oracle", "stabilizer profiles agree with conjugation", _stabilizer_oracle),
    ("stabilizer-generators", "stabilizer generators fix their vertex", _stabilizer_generators),
    ("edge-stabilizer", "stabilizers of flat edges and midpoints", _edge_stabilizer),
    ("flat-edges", "the height-flat edges are exactly the eta_n", _flat_edges),
    ("morse-property", "the repaired height is a Morse function", _morse_property),
    ("descending-links", "descending links are connected paths", _descending_links),
    ("descending-paths", "greedy descent reaches the base chamber", _descending_paths),
    ("label-homomorphism", "edge labels are a homomorphism", _label_homomorphism),
    ("congruence-split", "congruence split of unipotents", _congruence_split),
    ("local-cocycle", "phi is shift invariant, -2 on cycles", _local_cocycle),
    ("displayed-cycle", "the printed seven-term chain", _displayed_cycle),
    ("commutator-identity", "the commutator relation closing the cycles", _commutator_identity),
    ("pairing", "the pairing matrix is triangular of full rank", _pairing),
    ("rendering", "the sector drawing highlights exactly the flat edges", _rendering),
)


class Verifier(EventSender):
    _settings: ApplicationSettings = inject.attr(ApplicationSettings)

    def run(self) -> VerificationReport:
        settings = self._settings
        return self.verify(settings.i_max, settings.n_max, settings.seed, settings.samples)

    def verify(
        self, i_max: int, n_max: int, seed: int, samples: int = DEFAULT_SAMPLES
    ) -> VerificationReport:
        require_capacity(i_max, n_max)
        drain()

        table = morse_table(SectorWindow(i_max))
        lemmas, timing = [], {}
        context = SuiteContext(i_max, n_max, samples, random.Random(seed), table)
        for suite_id, title, suite in SUITES:
            self.emit_event("suite-started", suite_id)
            context.rng = random.Random(f"{seed}:{suite_id}")
            with Stopwatch() as stopwatch:
                result = self._run_suite(suite_id, title, suite, context)
            timing[suite_id] = stopwatch.elapsed_ms
            lemmas.append(result)
            self.emit_event("suite-finished", result)

        flags = tuple(str(incident) for incident in drain())
        return VerificationReport(
            parameters={"i_max": i_max, "n_max": n_max, "seed": seed, "samples": samples},
            lemmas=tuple(lemmas),
            pairing_matrix=context.pairing.entries if context.pairing else None,
            flags=flags,
            environment=environment(),
            timing=timing,
        )

    def _run_suite(
        self, suite_id: str, title: str, suite, context: SuiteContext
    ) -> LemmaResult:
        try:
            outcome = suite(context)
        except Exception as e:
            log.error("Suite %s raised: %s", suite_id, e)
            reporter.exception(suite_id, e)
            return LemmaResult(suite_id, title, 0, CheckStatus.FAIL, f"{e.__class__.__name__}: {e}")

        for flag in outcome.flags:
            log.warning("%s: %s", suite_id, flag)
            reporter.warning(suite_id, flag)
        if outcome.failures:
            for failure in outcome.failures[:5]:
                log.error("%s: %s", suite_id, failure)
            failed = len(outcome.failures)
            detail = f"{failed} of {outcome.checks} checks failed; first: {outcome.failures[0]}"
            reporter.error(suite_id, detail)
            return LemmaResult(suite_id, title, outcome.checks, CheckStatus.FAIL, detail)

        if outcome.flags:
            detail = "; ".join(outcome.flags)
            return LemmaResult(suite_id, title, outcome.checks, CheckStatus.FLAGGED, detail)
        detail = f"{outcome.checks} checks passed"
        return LemmaResult(suite_id, title, outcome.checks, CheckStatus.PASS, detail)


def verify_all(
    i_max: int, n_max: int, seed: int, samples: int = DEFAULT_SAMPLES
) -> VerificationReport:
    return Verifier().verify(i_max, n_max, seed, samples)
