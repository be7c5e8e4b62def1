import io
import os

import pytest

from lieclass.cli import (
    build_parser,
    parse_algebra_module,
    parse_factors,
    parse_module_spec,
    parse_tuple,
    run,
)
from lieclass.errors import BadParameter

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")

GOLDEN_CASES = [
    ("tuple.txt", ["tuple", "16/3,5,4,3,2,1"]),
    ("joseph_sl.txt", ["joseph", "sl", "2,3,1"]),
    ("odd_pair.txt", ["odd-pair", "5/2,3/2,1/2"]),
    (
        "count_simples.txt",
        ["count-simples", "--quiver", "A", "--n", "2", "--monodromy", "1/3"],
    ),
    ("order.txt", ["order", "--flag1", "1", "--flag2", "2", "--n", "6"]),
    ("classify.txt", ["classify", "--dims", "2", "--k", "sp(4)+sl(3)"]),
    (
        "oracle_flag.txt",
        ["oracle", "--k", "sp(4)", "--dims", "1,2", "--seed", "5"],
    ),
    (
        "product.txt",
        ["product", "--steps1", "2,3", "--steps2", "1,2,2", "--check",
         "--seed", "3"],
    ),
    ("table.txt", ["table", "--k", "sl(2)+sp(4) on C2xC4"]),
]


def run_capture(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, buf.getvalue()


class TestGolden:
    @pytest.mark.parametrize("fname,argv", GOLDEN_CASES)
    def test_byte_identical(self, fname, argv):
        code, text = run_capture(argv)
        assert code == 0
        with open(os.path.join(GOLDEN_DIR, fname), "rb") as fh:
            assert text.encode() == fh.read()

    @pytest.mark.parametrize("fname,argv", GOLDEN_CASES)
    def test_deterministic_across_runs(self, fname, argv):
        assert run_capture(argv) == run_capture(argv)


class TestExitCodes:
    def test_input_error_is_2(self):
        code, text = run_capture(["tuple", "1,notanumber"])
        assert code == 2 and text.startswith("error:")

    def test_short_tuple_is_2(self):
        code, _ = run_capture(["joseph", "sl", "2,1"])
        assert code == 2

    def test_unsupported_shape_is_3(self):
        code, text = run_capture(
            ["classify", "--dims", "1", "--k", "gl(4)"]
        )
        assert code == 3 and text.startswith("error:")

    def test_mismatched_product_totals(self):
        code, _ = run_capture(["product", "--steps1", "1,2", "--steps2", "1,3"])
        assert code == 2

    def test_missing_dims_for_flag_oracle(self):
        code, _ = run_capture(["oracle", "--k", "sp(4)"])
        assert code == 2


class TestSeedEnv:
    def test_env_seed_used(self, monkeypatch):
        monkeypatch.setenv("LIECLASS_SEED", "41")
        _, text = run_capture(["oracle", "--k", "sp(4)", "--dims", "1"])
        assert "seed: 41" in text

    def test_flag_overrides_env(self, monkeypatch):
        monkeypatch.setenv("LIECLASS_SEED", "41")
        _, text = run_capture(
            ["oracle", "--k", "sp(4)", "--dims", "1", "--seed", "7"]
        )
        assert "seed: 7" in text


class TestParsers:
    def test_parse_tuple(self):
        from fractions import Fraction

        assert parse_tuple("1/2,2") == (Fraction(1, 2), Fraction(2))
        with pytest.raises(BadParameter):
            parse_tuple("1,x")
        with pytest.raises(BadParameter):
            parse_tuple("1/0")

    def test_parse_factors(self):
        assert parse_factors("sl(3)+sp(4)") == [("sl", 3), ("sp", 4)]
        with pytest.raises(BadParameter):
            parse_factors("e8(248)")

    def test_parse_module_spec(self):
        spec = parse_module_spec("C3+C3*", [3])
        assert spec.summands == (("natural", 0), ("dual", 0))
        spec = parse_module_spec("C2xC4", [2, 4])
        assert spec.summands == (("tensor", (0, "n"), (1, "n")),)
        spec = parse_module_spec("C4+C1", [4])
        assert spec.summands == (("natural", 0), ("trivial",))

    def test_parse_algebra_module(self):
        factors, spec = parse_algebra_module("sl(2)+sp(4) on C2xC4")
        assert factors == [("sl", 2), ("sp", 4)]
        assert spec.summands == (("tensor", (0, "n"), (1, "n")),)
        with pytest.raises(BadParameter):
            parse_algebra_module("sl(2)")

    def test_parser_requires_subcommand(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])
