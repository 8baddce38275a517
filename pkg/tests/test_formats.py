import pytest

from src import json_writer, pgsolver_writer
from src.conditions import MinParity
from src.csv_writer import CSVWriter
from src.dot_export import Overlay, build_dot, export_dot
from src.errors import OutOfAlphabet, ParseError, UnknownVertexInOverlay
from src.inputs import InputLoader, load_condition, parse_inputs
from src.positionalize.stages import BETA, priority_stage
from src.priority import Priority
from src.readers.pgsolver_reader import PgSolverReader
from src.solvers import solve_condition
from tests.strategies import make_arena


def corpus_files(corpus, pattern):
    files = sorted(corpus.glob(pattern))
    assert files
    return files


class TestPgSolver:
    def test_single_vertex(self):
        arena = PgSolverReader().read("parity 1;\n0 2 0 0;\n")
        assert arena.ids == ("0",)
        assert arena.priority("0") == Priority(0, 0)
        assert arena.successors("0") == ("0",)
        assert pgsolver_writer.dumps(arena) == "parity 1;\n0 2 0 0;\n"

    def test_reflection_keeps_the_winner(self):
        arena = PgSolverReader().read("parity 2;\n0 3 0 1;\n1 0 1 0;\n")
        assert arena.metadata["reflection"] == 4
        assert arena.priority("0") == Priority(0, 1)
        assert solve_condition(arena, MinParity()).W1 == {"0", "1"}

    def test_bad_owner(self):
        with pytest.raises(ParseError) as err:
            PgSolverReader().read("parity 1;\n0 2 2 0;\n")
        assert err.value.line == 2

    def test_missing_header(self):
        with pytest.raises(ParseError):
            PgSolverReader().read("0 2 0 0;\n")

    def test_names_and_start(self, corpus):
        arena = InputLoader().load(str(corpus / "game_named.gm"))
        assert arena.metadata["names"] == {"0": "init", "3": "goal"}
        assert arena.metadata["start"] == "0"

    def test_limit_priorities_cannot_be_written(self):
        arena = make_arena({"v": (0, "w", ["v"])})
        with pytest.raises(OutOfAlphabet):
            pgsolver_writer.dumps(arena)

    def test_detection(self, corpus):
        loader = InputLoader()
        path = corpus / "game_ring.gm"
        assert loader.get_best_reader(str(path), path.read_text()).name == "pgsolver"
        path = corpus / "arena_cycle.json"
        assert loader.get_best_reader(str(path), path.read_text()).name == "json"


class TestCanonicalFiles:
    def test_json_files_are_stable(self, corpus):
        loader = InputLoader()
        for path in corpus_files(corpus, "*.json"):
            assert json_writer.dumps(loader.load(str(path))) == path.read_text(encoding="utf-8"), path.name

    def test_pgsolver_files_are_stable(self, corpus):
        for path in corpus_files(corpus, "*.gm"):
            arena = InputLoader().load(str(path))
            assert pgsolver_writer.dumps(arena) == path.read_text(encoding="utf-8"), path.name

    def test_write(self, corpus, tmp_path):
        arena = InputLoader().load(str(corpus / "arena_triangle.json"))
        target = tmp_path / "triangle.json"
        json_writer.write(str(target), arena)
        assert target.read_text(encoding="utf-8") == (corpus / "arena_triangle.json").read_text(encoding="utf-8")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            InputLoader().load(str(tmp_path / "absent.json"))

    def test_condition_file_must_hold_a_condition(self, corpus):
        with pytest.raises(ParseError):
            load_condition(str(corpus / "arena_single.json"))


class TestDot:
    @pytest.fixture
    def flower(self, corpus):
        return parse_inputs(str(corpus / "arena_flower2.json"), strategy_path=str(corpus / "strategy_flower.json"))

    def test_plain(self, flower):
        text = export_dot(flower.arena)
        assert text.count("shape=ellipse") == 1
        assert text.count("shape=box") == 2
        assert "filled" not in text
        assert "bold" not in text

    def test_regions_colour_every_vertex(self, flower):
        result = solve_condition(flower.arena, flower.condition)
        graph = build_dot(flower.arena, Overlay(regions={0: result.W0, 1: result.W1}))
        assert graph.to_string().count("style=filled") == len(flower.arena)

    def test_strategy_edge_is_bold(self, flower):
        graph = build_dot(flower.arena, Overlay.of(strategies=[flower.strategy]))
        bold = [e for e in graph.get_edges() if e.get("style") == "bold"]
        assert len(bold) == 1
        assert (bold[0].get_source(), bold[0].get_destination()) == ('"center"', '"petal1"')

    def test_stage_labels(self, corpus):
        arena = parse_inputs(str(corpus / "arena_beta_cycle.json")).arena
        text = export_dot(arena, Overlay.of(stages=priority_stage(arena, 1, BETA)))
        assert text.count("xlabel") == 2

    def test_unknown_vertex(self, flower):
        with pytest.raises(UnknownVertexInOverlay):
            export_dot(flower.arena, Overlay(stages={"ghost": 1}))


class TestCsv:
    def test_stage_table(self, corpus, tmp_path):
        arena = parse_inputs(str(corpus / "arena_beta_cycle.json")).arena
        writer = CSVWriter()
        headers, rows = writer.stage_rows(priority_stage(arena, 1, BETA))
        assert writer.to_text(headers, rows) == "vertex,beta\np,1\nq,0\n"
        target = tmp_path / "stages.csv"
        writer.write(str(target), headers, rows)
        assert target.read_text(encoding="utf-8").splitlines() == ["vertex,beta", "p,1", "q,0"]
