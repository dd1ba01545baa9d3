import csv
import io
import json
from importlib import resources

import jsonschema
import pytest

from sturmian_refine.cli import main
from sturmian_refine.exact_circle import AlphaSpec
from sturmian_refine.partitions import from_cut_labels, partition_to_json, sturmian_partition
from sturmian_refine.subshift import example1_rule

GOLDEN = AlphaSpec.golden()
P_JSON = json.dumps(partition_to_json(sturmian_partition(GOLDEN)))
# end-cut partition for k=2: cuts at <0> and <r_2 - 1> = <2>
END_CUTS = json.dumps({"alpha": "golden", "cuts": [{"orbit": 0, "label": "a"}, {"orbit": 2, "label": "b"}]})
EXAMPLE1 = json.dumps(example1_rule().to_json())
STURM_ID = json.dumps({"model": {"sturmian": "golden"}, "width": 1, "table": {"0": "a", "1": "b"}})


def schema(name):
    text = resources.files("sturmian_refine").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, report, *argv):
    code, out, _ = invoke(capsys, *argv)
    obj = json.loads(out)
    jsonschema.validate(obj, schema(report))
    return code, obj


def test_input_schemas_accept_library_output():
    jsonschema.validate(json.loads(P_JSON), schema("partition"))
    jsonschema.validate(json.loads(END_CUTS), schema("partition"))
    jsonschema.validate(json.loads(EXAMPLE1), schema("rule"))
    jsonschema.validate(GOLDEN.to_json(), schema("alpha"))


class TestCf:
    def test_tsv(self, capsys):
        code, out, _ = invoke(capsys, "cf", "--depth", "6")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out), delimiter="\t"))
        assert [int(r["q"]) for r in rows] == [1, 1, 2, 3, 5, 8, 13]
        assert rows[0]["c"] == "" and rows[1]["c"] == "1"

    def test_json(self, capsys):
        code, obj = invoke_json(capsys, "report_cf", "--alpha", "silver", "--format", "json", "cf", "--depth", "5")
        assert code == 0
        assert [r["q"] for r in obj["rows"]] == [1, 2, 5, 12, 29, 70]

    def test_inline_alpha(self, capsys):
        alpha = json.dumps({"cf": {"prefix": [], "period": [1, 2]}})
        code, out, _ = invoke(capsys, "--alpha", alpha, "cf", "--depth", "3")
        assert code == 0 and out.count("\n") == 5


class TestPartition:
    def test_refine(self, capsys):
        code, obj = invoke_json(capsys, "report_refine", "partition", "refine", P_JSON, "--n", "4")
        assert code == 0 and obj["num_arcs"] == 5
        assert all(len(a["name"]) == 4 for a in obj["arcs"])

    def test_refine_from_file(self, capsys, tmp_path):
        path = tmp_path / "p.json"
        path.write_text(P_JSON)
        code, obj = invoke_json(capsys, "report_refine", "partition", "refine", str(path), "--n", "2")
        assert code == 0 and obj["num_arcs"] == 3

    def test_thm1(self, capsys):
        code, obj = invoke_json(capsys, "report_thm1", "partition", "verify-thm1", P_JSON)
        assert code == 0 and obj["holds"]

    def test_thm2_on_P(self, capsys):
        code, obj = invoke_json(capsys, "report_thm2", "partition", "verify-thm2", P_JSON)
        assert code == 0
        assert (obj["K"], obj["M"]) == (9, 9)
        assert obj["holds"]

    def test_power_cap(self, capsys):
        code, _, err = invoke(capsys, "--max-power", "2", "partition", "refine", P_JSON, "--n", "10")
        assert code == 3 and "resource cap" in err


class TestTowers:
    def test_ascii(self, capsys):
        code, out, _ = invoke(capsys, "towers", "show", "--k", "3")
        assert code == 0
        assert "I_3 tower, height 2" in out and "I_2 tower, height 3" in out

    def test_json_with_labels(self, capsys):
        code, obj = invoke_json(capsys, "report_towers_show", "--format", "json", "towers", "show",
                                "--k", "2", "--partition", P_JSON)
        assert code == 0
        assert obj["left"]["height"] + obj["right"]["height"] == 3
        assert all("label" in lv for lv in obj["left"]["levels"])

    def test_render_cap(self, capsys):
        code, _, _ = invoke(capsys, "towers", "show", "--k", "12")
        assert code == 3

    def test_codes(self, capsys):
        code, obj = invoke_json(capsys, "report_towers_codes", "towers", "codes", "--k", "2",
                                "--partition", END_CUTS)
        assert code == 0
        assert obj["z_length"] == len(obj["z"])

    def test_not_coded(self, capsys):
        coarse = json.dumps(partition_to_json(from_cut_labels(GOLDEN, [(0, "a"), (5, "b")])))
        code, _, err = invoke(capsys, "towers", "codes", "--k", "1", "--partition", coarse)
        assert code == 2 and err


class TestSbc:
    def test_example1(self, capsys):
        code, obj = invoke_json(capsys, "report_sbc_analyze", "sbc", "analyze", EXAMPLE1)
        assert code == 0
        assert obj["minimal"] is True and obj["ignores_first_letter"] is False
        assert obj["injective_at"] is None

    def test_sturmian(self, capsys):
        code, obj = invoke_json(capsys, "report_sbc_analyze", "sbc", "analyze", STURM_ID)
        assert code == 0 and obj["minimal_n"]["n_min"] == 1

    def test_minimal_n(self, capsys):
        code, obj = invoke_json(capsys, "report_sbc_minimal_n", "sbc", "minimal-n", STURM_ID)
        assert code == 0 and obj["n_min"] == 1

    def test_language_error(self, capsys):
        bad = json.dumps({"model": {"sturmian": "golden"}, "width": 2,
                          "table": {"00": "a", "01": "a", "10": "b", "11": "a"}})
        code, _, _ = invoke(capsys, "sbc", "analyze", bad)
        assert code == 2


class TestDemos:
    def test_example1(self, capsys):
        code, obj = invoke_json(capsys, "report_example1", "demo", "example1", "--n-max", "5", "--prefix-cap", "8")
        assert code == 0 and obj["collisions_ok"] and obj["prefix_ok"]

    def test_symmetric_third(self, capsys):
        code, obj = invoke_json(capsys, "report_symmetric", "demo", "symmetric", "--m", "3", "--max-n", "6")
        assert code == 0 and obj["m"] == 3 and obj["all_disconnected"]

    def test_symmetric(self, capsys):
        code, obj = invoke_json(capsys, "report_symmetric", "demo", "symmetric", "--max-n", "8")
        assert code == 0 and obj["all_disconnected"] and obj["connected_at"] == []

    def test_experiment(self, capsys):
        code, obj = invoke_json(capsys, "report_experiment", "--format", "json", "--seed", "3",
                                "experiment", "random", "--trials", "4", "--n", "5")
        assert code == 0 and len(obj["rows"]) == 4 and all(r["holds"] for r in obj["rows"])

    def test_experiment_parallel_matches_serial(self, capsys):
        args = ["--seed", "9", "experiment", "random", "--trials", "4", "--n", "4", "--labels", "3"]
        _, serial, _ = invoke(capsys, *args)
        _, parallel, _ = invoke(capsys, *args, "--jobs", "2")
        assert serial == parallel


class TestErrors:
    @pytest.mark.parametrize("alpha", ["bronze", '{"cf": [1, 2]}', '{"quadratic": {"p": 1, "q": 0, "d": 5, "r": 2}}', "{not json"])
    def test_bad_alpha(self, capsys, alpha):
        code, out, err = invoke(capsys, "--alpha", alpha, "cf")
        assert code == 2 and out == "" and err.startswith("error:")

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = invoke(capsys, "partition", "refine", str(tmp_path / "none.json"), "--n", "2")
        assert code == 2

    def test_argparse_usage(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["partition"])
        assert info.value.code == 2
        capsys.readouterr()


@pytest.mark.parametrize("argv", [
    ["--format", "json", "cf"],
    ["partition", "verify-thm2", P_JSON],
    ["towers", "show", "--k", "4"],
    ["sbc", "analyze", EXAMPLE1],
])
def test_deterministic(capsys, argv):
    _, first, _ = invoke(capsys, *argv)
    _, second, _ = invoke(capsys, *argv)
    assert first == second and first
