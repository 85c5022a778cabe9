"""Command-line interface: exit codes, formats, golden-file determinism."""

import json

import pytest

from cuspcobord.cli import main

from _corpus import REPO_ROOT, load_manifest, run_entry

MANIFEST = load_manifest()


@pytest.mark.parametrize(
    "spec", MANIFEST, ids=[" ".join(s["argv"]) for s in MANIFEST])
def test_corpus_command_matches_golden(spec):
    problems = run_entry(spec)
    assert not problems, problems


class TestExitCodes:
    def test_missing_file_is_a_schema_error(self, capsys):
        assert main(["invariant", "no_such_file.json"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_malformed_json_is_a_schema_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json]")
        assert main(["invariant", str(bad)]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2
        capsys.readouterr()

    def test_no_arguments(self, capsys):
        assert main([]) == 2
        capsys.readouterr()

    def test_invalid_descriptor_is_a_precondition_error(self, tmp_path,
                                                        capsys):
        f = tmp_path / "d.json"
        f.write_text(json.dumps({
            "n": 2, "oriented": True, "chi_M": 0, "chi_boundary": 2,
            "interior": [],
            "boundary": [{"id": "x0", "mu": 0, "sigma": 1},
                         {"id": "x1", "mu": 1, "sigma": 1}]}))
        assert main(["invariant", str(f)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_degenerate_family_parameter(self, capsys):
        assert main(["trace", "swallowtail", "--t", "0"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_check_requires_sigma(self, capsys):
        pat = str(REPO_ROOT / "corpus" / "interval_0cusp.json")
        assert main(["pattern", "check", pat]) == 2
        capsys.readouterr()

    def test_cobordant_dimension_mismatch(self, capsys):
        a = str(REPO_ROOT / "corpus" / "fig2.json")
        b = str(REPO_ROOT / "corpus" / "d3_generator.json")
        assert main(["cobordant", a, b]) == 2
        capsys.readouterr()


class TestJsonMode:
    def test_invariant_payload(self, capsys):
        f = str(REPO_ROOT / "corpus" / "fig2.json")
        assert main(["invariant", f, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"n": 2, "chi_M": 1, "chi_plus": 0,
                           "invariant": 1, "group": "Z/2"}

    def test_extendable_payload(self, capsys):
        f = str(REPO_ROOT / "corpus" / "d3_sigma_pm.json")
        assert main(["extendable", f, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["necessary_condition"] == "pass"

    def test_trace_embeds_artifact_when_no_out_path(self, capsys):
        assert main(["trace", "fold", "--n", "2", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["kind"] == "fold"
        assert payload["content"].startswith("<svg")


class TestNormalizeOutputs:
    def test_trace_file_replays(self, tmp_path, capsys):
        out = tmp_path / "trace.json"
        code = main(["pattern", "normalize",
                     str(REPO_ROOT / "corpus" / "two_intervals_n3.json"),
                     "--sigma",
                     str(REPO_ROOT / "corpus" / "sigma_pp_pp.json"),
                     "--out", str(out)])
        capsys.readouterr()
        assert code == 0
        from cuspcobord.moves import replay
        from cuspcobord.serialize import trace_from_json
        with open(out, encoding="utf-8") as fh:
            trace = trace_from_json(json.load(fh))
        assert replay(trace) == trace.final

    def test_obstruction_report_fields(self, capsys):
        code = main(["pattern", "normalize",
                     str(REPO_ROOT / "corpus" / "interval_0cusp.json"),
                     "--sigma", str(REPO_ROOT / "corpus" / "sigma_pp.json"),
                     "--chi-v", "1", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 1
        assert payload["status"] == "obstruction"
        assert payload["obstruction"]["kind"] == "parity_mismatch"


class TestArtifacts:
    def test_svg_golden_tracks_renderer(self, tmp_path, capsys):
        out = tmp_path / "st.svg"
        assert main(["trace", "swallowtail", "--t", "1",
                     "--out", str(out)]) == 0
        capsys.readouterr()
        golden = (REPO_ROOT / "golden" / "st1.svg").read_text()
        assert out.read_text() == golden

    def test_csv_stdout_matches_golden(self, capsys):
        assert main(["trace", "fold", "--i", "1", "--n", "3", "--csv"]) == 0
        got = capsys.readouterr().out
        golden = (REPO_ROOT / "golden" / "trace_fold.csv").read_text()
        assert got == golden
