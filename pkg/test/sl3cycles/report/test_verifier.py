from test.sl3cycles.mocks import ApplicationSettingsMock

import inject
import pytest

from sl3cycles.report import verifier
from sl3cycles.report.status import CheckStatus
from sl3cycles.report.verifier import SUITES, Verifier, verify_all
from sl3cycles.settings import ApplicationSettings, ConfigurationError


@pytest.fixture(autouse=True)
def setup_inject():
    inject.clear_and_configure(
        lambda binder: binder.bind_to_constructor(ApplicationSettings, ApplicationSettingsMock)
    )
    yield
    inject.clear()


@pytest.fixture(scope="module")
def small_report():
    return verify_all(9, 3, seed=0, samples=4)


def test_every_suite_reports(small_report):
    assert [lemma.id for lemma in small_report.lemmas] == [suite_id for suite_id, _, _ in SUITES]


def test_small_run_passes(small_report):
    assert small_report.passed
    failed = [lemma for lemma in small_report.lemmas if lemma.status == CheckStatus.FAIL]
    assert failed == []


def test_printed_chain_is_flagged(small_report):
    assert small_report.lemma("displayed-cycle").status == CheckStatus.FLAGGED
    assert any(flag.startswith("[WARN] displayed-cycle:") for flag in small_report.flags)


def test_pairing_is_part_of_the_report(small_report):
    matrix = small_report.pairing_matrix
    assert len(matrix) == 4
    assert [matrix[k][k] for k in range(4)] == [-2, -2, -2, -2]
    assert small_report.lemma("pairing").status == CheckStatus.FLAGGED


def test_report_records_parameters_and_environment(small_report):
    assert small_report.parameters == {"i_max": 9, "n_max": 3, "seed": 0, "samples": 4}
    assert "python_version" in small_report.environment
    assert set(small_report.timing) == {suite_id for suite_id, _, _ in SUITES}


def test_same_seed_gives_same_outcome(small_report):
    assert verify_all(9, 3, seed=0, samples=4).outcome() == small_report.outcome()


@pytest.mark.parametrize("seed", [1, 17])
def test_other_seeds_give_the_same_verdicts(small_report, seed):
    report = verify_all(9, 3, seed=seed, samples=4)
    assert report.passed == small_report.passed
    assert [(lemma.id, lemma.status) for lemma in report.lemmas] == [
        (lemma.id, lemma.status) for lemma in small_report.lemmas
    ]
    assert report.pairing_matrix == small_report.pairing_matrix
    assert report.flags == small_report.flags


def test_run_uses_injected_settings(mocker):
    verify = mocker.patch.object(Verifier, "verify")
    Verifier().run()
    verify.assert_called_once_with(9, 3, 0, 4)


def test_suites_emit_events(mocker):
    mocker.patch.object(verifier, "SUITES", SUITES[:2])
    listener = mocker.MagicMock()
    instance = Verifier()
    instance.add_listener(listener)
    instance.verify(9, 3, 0, 2)

    events = [call.args[0] for call in listener.call_args_list]
    assert events == ["suite-started", "suite-finished"] * 2
    assert listener.call_args_list[0].args[1] == SUITES[0][0]


def test_raising_suite_fails_the_report(mocker):
    def broken(context):
        raise RuntimeError("window exhausted")

    mocker.patch.object(verifier, "SUITES", (("broken", "always raises", broken),))
    report = Verifier().verify(9, 3, 0, 2)

    assert not report.passed
    assert report.lemma("broken").status == CheckStatus.FAIL
    assert "window exhausted" in report.lemma("broken").detail
    assert any("broken" in flag for flag in report.flags)


def test_failing_checks_are_reported_as_errors(mocker):
    def failing(context):
        outcome = verifier.SuiteOutcome()
        outcome.check(False, "height went up")
        outcome.flags.append("window is small")
        return outcome

    mocker.patch.object(verifier, "SUITES", (("failing", "never holds", failing),))
    report = Verifier().verify(9, 3, 0, 2)

    assert report.lemma("failing").status == CheckStatus.FAIL
    assert "[WARN] failing: window is small" in report.flags
    assert any(flag.startswith("[ERROR] failing: 1 of 1 checks failed") for flag in report.flags)


def test_window_too_small_is_rejected():
    with pytest.raises(ConfigurationError):
        verify_all(5, 3, seed=0)
