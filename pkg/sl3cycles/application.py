import json
import logging
import threading
from dataclasses import dataclass
from typing import Any, Callable

import inject

from sl3cycles import __version__
from sl3cycles.control.cocycle import boundary, phi, sigma_hat, sigma_words
from sl3cycles.control.links import descending_link
from sl3cycles.control.morse import MorseTable, flat_edges, height_key, hhat_sq, is_morse
from sl3cycles.control.pairing import pairing_matrix
from sl3cycles.control.rational_format import rational_matrix_to_strings, rational_to_string
from sl3cycles.enums import Command
from sl3cycles.model.apartment import (
    X0,
    ApartmentVertex,
    NotInSector,
    SectorWindow,
    WindowOverflow,
    boundary_class,
    eta,
    vertex_sort_key,
)
from sl3cycles.model.stabilizer import (
    enumerate_generators,
    form_parameters,
    membership,
    oracle_stabilizes,
    vertex_profile,
)
from sl3cycles.report import reporter
from sl3cycles.report.verifier import Verifier
from sl3cycles.settings import ApplicationSettings, ConfigurationError
from sl3cycles.ui.svg_renderer import render_sector

log = logging.getLogger("application")

EXIT_OK = 0
EXIT_INVARIANT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class CommandResult:
    payload: dict[str, Any]
    text: str
    passed: bool


def _matrix_text(rows) -> list[str]:
    return [" ".join(f"{str(value):>3}" for value in row) for row in rows]


class Application:
    _settings: ApplicationSettings = inject.attr(ApplicationSettings)

    def __init__(self):
        threading.excepthook = self.handle_exception

    def run(self) -> int:
        command = self._settings.command
        log.info("Starting sl3cycles %s: %s", __version__, command.value)
        handlers: dict[Command, Callable[[], CommandResult]] = {
            Command.VERIFY: self._verify,
            Command.STAB: self._stab,
            Command.HEIGHTS: self._heights,
            Command.FLAT_EDGES: self._flat_edges,
            Command.LINK: self._link,
            Command.CYCLE: self._cycle,
            Command.PAIRING: self._pairing,
            Command.RENDER: self._render,
        }

        try:
            result = handlers[command]()
        except (ConfigurationError, NotInSector, WindowOverflow) as e:
            log.error(e)
            return EXIT_USAGE
        except OSError as e:
            log.error("Could not write output: %s", e)
            reporter.exception("application", e)
            return EXIT_USAGE

        if self._settings.json_output:
            print(json.dumps(result.payload, indent=2))
        else:
            print(result.text)

        if not result.passed:
            log.error("Invariant check failed for %s", command.value)
            return EXIT_INVARIANT_FAILED
        return EXIT_OK

    def handle_exception(self, args):
        thread = args.thread.name if args.thread else "thread"
        log.error("Unhandled exception in %s: %s", thread, args.exc_value)
        reporter.exception("application", args.exc_value)

    @property
    def _table(self) -> MorseTable:
        return inject.instance(MorseTable)

    def _verify(self) -> CommandResult:
        report = inject.instance(Verifier).run()
        lines = [
            f"{lemma.status.value.upper():8} {lemma.id:22} {lemma.checks:7}  {lemma.title}"
            for lemma in report.lemmas
        ]
        lines += [f"flag: {flag}" for flag in report.flags]
        if report.pairing_matrix is not None:
            lines.append("pairing matrix:")
            lines += ["  " + row for row in _matrix_text(report.pairing_matrix)]
        return CommandResult(report.to_dict(), "\n".join(lines), report.passed)

    def _stab(self) -> CommandResult:
        i, j = self._settings.vertex
        vertex = ApartmentVertex.in_sector(i, j)
        profile = vertex_profile(vertex)
        generators = enumerate_generators(profile)
        passed = all(membership(g, profile) and oracle_stabilizes(g, vertex) for g in generators)
        form = form_parameters(vertex)
        u, v, w = profile.upper()

        payload = {
            "vertex": [vertex.i, vertex.j],
            "class": boundary_class(vertex).value,
            "bounds": [list(row) for row in profile.bounds],
            "upper": {"u": u, "v": v, "w": w},
            "form": list(form) if form else None,
            "generators": len(generators),
        }
        text = "\n".join(
            [
                f"vertex {vertex} ({boundary_class(vertex).value})",
                "degree bounds:",
                *("  " + " ".join(f"{b:>4}" for b in row) for row in profile.bounds),
                f"u <= {u}, v <= {v}, w <= {w}",
                f"{len(generators)} generators, all fix the vertex: {passed}",
            ]
        )
        return CommandResult(payload, text, passed)

    def _heights(self) -> CommandResult:
        table = self._table
        vertices = []
        for vertex, h in table.items():
            key = height_key(vertex)
            vertices.append({"vertex": str(vertex), "qsq": key.qsq, "tie": key.tie, "h": h})

        morse = is_morse(table)
        text = "\n".join(f"{row['h']:4}  {row['vertex']:24} q={row['qsq']}" for row in vertices)
        text += f"\nMorse property: {morse}"
        payload = {"i_max": table.i_max, "vertices": vertices, "morse": morse}
        return CommandResult(payload, text, morse)

    def _flat_edges(self) -> CommandResult:
        window = SectorWindow(self._settings.i_max)
        found = flat_edges(window)
        expected = [eta(n) for n in range(window.i_max) if 2 * n + 2 <= window.i_max]
        matches = set(found) == set(expected)

        edges = [[[v.i, v.j] for v in edge.vertices] for edge in found]
        text = "\n".join(f"{a} - {b}  q={hhat_sq(a)}" for a, b in (e.vertices for e in found))
        text += f"\n{len(found)} flat edges, exactly the eta_n: {matches}"
        payload = {"i_max": window.i_max, "flat_edges": edges, "matches_eta": matches}
        return CommandResult(payload, text, matches)

    def _link(self) -> CommandResult:
        i, j = self._settings.vertex
        vertex = ApartmentVertex(i, j)
        table = self._table
        lower = descending_link(vertex, table, apartment=True)
        connected = lower.is_connected()
        if vertex == X0:
            passed = lower.is_empty()
        else:
            passed = connected and len(lower.edges) <= 2

        vertices = sorted(lower.vertices, key=vertex_sort_key)
        edges = sorted(tuple(str(v) for v in edge.vertices) for edge in lower.edges)
        payload = {
            "vertex": str(vertex),
            "h": table.h(vertex),
            "vertices": [str(v) for v in vertices],
            "edges": [list(edge) for edge in edges],
            "connected": connected,
        }
        text = "\n".join(
            [
                f"descending link of {vertex} (h = {table.h(vertex)})",
                "vertices: " + ", ".join(str(v) for v in vertices),
                "edges: " + ", ".join(f"{a}-{b}" for a, b in edges),
                f"connected: {connected}",
            ]
        )
        return CommandResult(payload, text, passed)

    def _cycle(self) -> CommandResult:
        n = self._settings.cycle_index if self._settings.cycle_index is not None else 1
        chain = sigma_hat(n)
        value = phi(chain)
        closed = boundary(chain).is_zero()

        words = [
            {
                "sign": sign,
                "word": str(word),
                "label": [rational_to_string(c) for c in word.label(n)],
            }
            for sign, word in sigma_words(n)
        ]
        terms = [
            {
                "q": rational_to_string(edge.q),
                "r": rational_to_string(edge.r),
                "coefficient": rational_to_string(c),
            }
            for edge, c in chain.items()
        ]
        payload = {
            "n": n,
            "words": words,
            "sigma_hat": terms,
            "phi": rational_to_string(value),
            "closed": closed,
        }
        lines = [
            f"{'+' if w['sign'] > 0 else '-'} {w['word']}  label {tuple(w['label'])}" for w in words
        ]
        lines += [f"projection: {chain}", f"phi = {value}", f"boundary is zero: {closed}"]
        return CommandResult(payload, "\n".join(lines), value == -2 and closed)

    def _pairing(self) -> CommandResult:
        matrix = pairing_matrix(self._settings.n_max, self._table)
        rank = matrix.rank()
        passed = (
            matrix.is_upper_triangular()
            and all(v == -2 for v in matrix.diagonal)
            and rank == matrix.n_max + 1
        )
        certificates = [
            {
                "m": c.m,
                "n": c.n,
                "kind": c.kind.value,
                "value": rational_to_string(c.value),
                "detail": c.detail,
                "extrapolated": c.extrapolated,
            }
            for c in matrix.certificates
        ]
        payload = {
            "n_max": matrix.n_max,
            "matrix": rational_matrix_to_strings(matrix.entries),
            "rank": rank,
            "certificates": certificates,
        }
        text = "\n".join(_matrix_text(matrix.entries)) + f"\nrank {rank}"
        return CommandResult(payload, text, passed)

    def _render(self) -> CommandResult:
        window = SectorWindow(self._settings.i_max)
        output = self._settings.output
        document = render_sector(window, output, self._table)
        census = flat_edges(window)
        highlighted = document.count('class="flat"')

        payload = {
            "i_max": window.i_max,
            "output": str(output) if output else None,
            "highlighted": highlighted,
        }
        if output is None:
            text = document
        else:
            text = f"wrote {output} with {highlighted} highlighted edges"
        return CommandResult(payload, text, highlighted == len(census))
