import logging

import pytest

from polyadica.diophantine import known_identities, run_registry, verify, verify_registry

logging.disable(logging.INFO)


class TestKnownIdentities:
    @pytest.mark.parametrize("identity", known_identities(), ids=lambda i: i.name)
    def test_identity(self, identity):
        verdict = verify(identity.instance(), identity.solution())
        assert verdict.holds == identity.expected

    def test_registry(self):
        rows = verify_registry()
        assert len(rows) == len(known_identities())
        assert all(row["passed"] for row in rows)
        assert [row["name"] for row in rows if row["suspect"]] == ["quintic-2-3"]

    def test_suspect_quintic(self):
        row = {r["name"]: r for r in verify_registry()}["quintic-2-3"]
        assert not row["holds"]
        assert row["reason"] == "length mismatch"
        assert row["binary_form"] == ["537824", "376741"]

    def test_binary_counterpart(self):
        rows = {r["name"]: r for r in verify_registry()}
        assert rows["cube-6"]["binary_form"] == rows["cube-6-binary"]["binary_form"] == ["216", "216"]

    def test_dataframe(self):
        df = run_registry()
        assert df["passed"].all()
        assert set(df["name"]) >= {"cube-709", "quartic-422481", "sextic"}
