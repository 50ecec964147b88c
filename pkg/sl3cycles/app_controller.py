import argparse
import logging

import inject

from sl3cycles.architecture.singleton import Singleton
from sl3cycles.control.morse import MorseTable, morse_table
from sl3cycles.model.apartment import SectorWindow
from sl3cycles.report import reporter
from sl3cycles.report.verifier import Verifier
from sl3cycles.settings import ApplicationSettings

log = logging.getLogger("controller")


class AppController(metaclass=Singleton):
    def __init__(self, arguments: argparse.Namespace):
        self.arguments = arguments

        inject.configure_once(self.configure_inject)

        reporter.info("main", "startup")

        self.verifier: Verifier = inject.instance(Verifier)
        self.verifier.add_listener(self._on_verifier_event)

    def configure_inject(self, binder):
        binder.bind(argparse.Namespace, self.arguments)
        binder.bind_to_constructor(ApplicationSettings, lambda: ApplicationSettings())
        binder.bind_to_constructor(MorseTable, self._build_table)
        binder.bind_to_constructor(Verifier, lambda: Verifier())

    def _build_table(self) -> MorseTable:
        return morse_table(SectorWindow(inject.instance(ApplicationSettings).i_max))

    def _on_verifier_event(self, event: str, message):
        if event == "suite-started":
            log.info("Running %s", message)
        elif event == "suite-finished":
            log.info("%s: %s (%d checks)", message.id, message.status.value, message.checks)
