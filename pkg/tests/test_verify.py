"""End-to-end runs of the theorem verifiers."""

import pytest

from nakayama_ar.config import Settings
from nakayama_ar.core.verify import Checklist, run_verifier
from nakayama_ar.errors import UnknownAlias, ZeroModule


class TestChecklist:
    def test_exceptions_fail_one_check(self) -> None:
        checks = Checklist("demo")

        def broken() -> bool:
            raise ZeroModule("no module")

        assert checks.check("fine", lambda: True)
        assert not checks.check("broken", broken)
        report = checks.report()
        assert not report.passed
        assert report.first_failure is not None
        assert report.first_failure.name == "broken"
        assert report.first_failure.detail.startswith("ZeroModule")

    def test_detail_from_tuple(self) -> None:
        checks = Checklist("demo")
        checks.check("count", lambda: (False, "found 2"))
        assert checks.report().checks[0].detail == "found 2"


class TestRunVerifier:
    @pytest.mark.parametrize("name", ["bogus", "zan", "example-d4:3", "zdn:"])
    def test_unknown_names(self, name: str, settings: Settings) -> None:
        with pytest.raises(UnknownAlias):
            run_verifier(name, settings)


@pytest.mark.slow
class TestFamilies:
    @pytest.mark.parametrize(
        "name", ["example-d4", "zan:3", "zan:4", "zan:5", "zdn:4", "zdn:5", "zdn:6"]
    )
    def test_passes(self, name: str, settings: Settings) -> None:
        report = run_verifier(name, settings)
        assert report.passed, report.first_failure
        assert report.name == name
        assert len(report.checks) > 5

    @pytest.mark.parametrize("name", ["zan:4", "zan:5", "zdn:5", "zdn:6"])
    def test_simple_in_degrees_checked(self, name: str, settings: Settings) -> None:
        report = run_verifier(name, settings)
        (check,) = [c for c in report.checks if c.name == "simple predecessor counts"]
        assert check.passed, check.detail
