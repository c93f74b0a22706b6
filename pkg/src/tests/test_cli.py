"""
Тесты командной строки: коды возврата, текстовый и JSON вывод.

Запуск тестов:
    pytest src/tests/test_cli.py -v
"""

import json
import logging

import pytest

from src.cli.main import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main, parse_scheme_triple
from src.combinatorics.schemes import NEGATIVE, Scheme
from src.exceptions.cli_exceptions import InputFormatError

logger = logging.getLogger(__name__)


class TestCliUnit:
    """
    Unit тесты команд schemes, roots, gen и alg.
    """

    @pytest.mark.unit
    def test_roots_count(self, capsys):
        """
        Тест: при n = 2 восемь корневых последовательностей.
        """
        assert main(["roots", "count", "--n", "2"]) == EXIT_PASS, "Command should succeed"
        assert capsys.readouterr().out.strip() == "8", "Text output is the count"

        assert main(["roots", "count", "--n", "3", "--json"]) == EXIT_PASS, "Command should succeed"
        data = json.loads(capsys.readouterr().out)
        assert data == {"n": 3, "root_sequences": 48, "pairs": 2304}, f"Unexpected JSON {data}"
        logger.info("✓ roots count test passed")

    @pytest.mark.unit
    def test_pair_check_exit_codes(self, capsys):
        """
        Тест кодов возврата для проходящей и не проходящей пары.
        """
        assert main(["schemes", "pair-check", "--pos", "1,2", "--neg", "3,4"]) == EXIT_PASS, "Pair should pass"
        assert "passes" in capsys.readouterr().out, "Verdict should be printed"
        assert main(["schemes", "pair-check", "--pos", "1,2", "--neg", "1,2"]) == EXIT_FAIL, "Pair should fail"
        assert "fails" in capsys.readouterr().out, "Verdict should be printed"
        logger.info("✓ pair-check test passed")

    @pytest.mark.unit
    def test_star_and_render(self, capsys):
        """
        Тест JSON для star и плоской отрисовки.
        """
        assert main(["schemes", "star", "--k", "1", "--m", "2", "--json"]) == EXIT_PASS, "star should succeed"
        assert json.loads(capsys.readouterr().out) == {"sign": "positive", "k": 3, "m": 4, "set": [3]}, \
            "Star of (1,2,∅) should be (3,4,{3})"
        assert main(["schemes", "render", "--k", "1", "--m", "3"]) == EXIT_PASS, "render should succeed"
        assert capsys.readouterr().out.strip() == "0:∘ 1:∘ 2:∘ 3:●", "Flat render is wrong"
        logger.info("✓ star and render test passed")

    @pytest.mark.unit
    def test_roots_sigma_member(self, capsys):
        """
        Тест моноида схемы (1,2,∅) и проверки степени.
        """
        args = ["roots", "sigma", "--k", "1", "--m", "2", "--member", "1,2", "--json"]
        assert main(args) == EXIT_PASS, "sigma should succeed"
        data = json.loads(capsys.readouterr().out)
        assert data["generators"] == [[0, 1], [1, 1]], "Generators are wrong"
        assert data["member"]["contains"] and not data["member"]["indecomposable"], "(1,2) decomposes in Σ"
        logger.info("✓ roots sigma test passed")

    @pytest.mark.unit
    def test_alg_bracket_json(self, capsys):
        """
        Тест [x1, x1-] = 1 - h1 в JSON.
        """
        assert main(["alg", "bracket", "x1", "x1-", "--json"]) == EXIT_PASS, "bracket should succeed"
        data = json.loads(capsys.readouterr().out)
        assert sorted(row["coeff"] for row in data) == ["-1/1", "1/1"], "Two terms with ±1 expected"
        logger.info("✓ alg bracket test passed")

    @pytest.mark.unit
    def test_tables_agree(self, capsys):
        """
        Тест: таблица σ при n = 2 согласована.
        """
        assert main(["gen", "tables", "--kind", "sigma", "--json"]) == EXIT_PASS, "Tables should agree"
        data = json.loads(capsys.readouterr().out)
        assert data["rows"] and all(row["agree"] for row in data["rows"]), "Every row should agree"
        logger.info("✓ gen tables test passed")

    @pytest.mark.unit
    @pytest.mark.parametrize("argv", [
        ["alg", "bracket", "x1", "y2"],
        ["schemes", "render", "--k", "0", "--m", "1"],
        ["schemes", "render", "--k", "1", "--m", "2", "--style", "two_line"],
        ["roots", "count", "--q", "1"],
        ["roots", "count", "--params", "{not json"],
    ])
    def test_bad_input(self, capsys, argv):
        """
        Тест кода 2 и сообщения об ошибке.
        """
        assert main(argv) == EXIT_USAGE, f"{argv} should be a usage error"
        assert capsys.readouterr().err.startswith("error:"), "Error should go to stderr"
        logger.info(f"✓ Bad input {argv} test passed")

    @pytest.mark.unit
    def test_out_file(self, capsys, tmp_path):
        """
        Тест записи результата в файл.
        """
        target = tmp_path / "count.txt"
        assert main(["roots", "count", "--n", "1", "--out", str(target)]) == EXIT_PASS, "Command should succeed"
        assert target.read_text(encoding="utf-8") == "2\n", "File should hold the count"
        assert capsys.readouterr().out == "", "Nothing should be printed"
        logger.info("✓ --out test passed")

    @pytest.mark.unit
    def test_scheme_triple(self):
        """
        Тест разбора 'k,m,S'.
        """
        assert parse_scheme_triple("1,3,1,2", 2) == Scheme(2, 1, 3, frozenset({1, 2})), "Set after k,m"
        assert parse_scheme_triple("3,4", 2, NEGATIVE).sign == NEGATIVE, "Sign should be kept"
        with pytest.raises(InputFormatError):
            parse_scheme_triple("1", 2)
        logger.info("✓ Scheme triple test passed")


class TestCliIntegration:
    """
    Integration тест команды verify.
    """

    @pytest.mark.integration
    def test_verify_counts(self, capsys):
        """
        Тест verify для набора counts.
        """
        argv = ["verify", "--suite", "counts", "--n", "2", "--specializations", "1", "--json"]
        assert main(argv) == EXIT_PASS, "counts should pass"
        data = json.loads(capsys.readouterr().out)
        assert data["passed"] and len(data["reports"]) == 1, "One passing report expected"
        logger.info("✓ verify counts test passed")

    @pytest.mark.integration
    def test_verify_unknown_suite(self, capsys):
        """
        Тест неизвестного набора.
        """
        assert main(["verify", "--suite", "nope"]) == EXIT_USAGE, "Unknown suite is a usage error"
        assert "nope" in capsys.readouterr().err, "Message should name the suite"
        logger.info("✓ verify unknown suite test passed")
