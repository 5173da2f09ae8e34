"""
Tests pour le moteur de pipelines, les sorties et la CLI.
"""

import argparse
import json
from pathlib import Path

import pytest

from tropical_app.__main__ import main
from tropical_app.core.data_models import RunReport
from tropical_app.core.engine import PipelineEngine
from tropical_app.core.errors import FourPointViolation, MalformedInput, UnknownSubcommand
from tropical_app.core.pipeline import IPipeline
from tropical_app.core.settings import Settings, load_settings
from tropical_app.outputs import emit
from tropical_app.pipelines import ALL_PIPELINES, build_engine


DATA_DIR = Path(__file__).resolve().parents[2] / "data"


class _StubPipeline(IPipeline):
    """Pipeline de test renvoyant un résultat fixé ou levant une erreur."""

    def __init__(self, name, payload=None, error=None):
        self.name = name
        self.description = f"stub {name}"
        self._payload = payload or {}
        self._error = error

    def configure(self, parser):
        parser.add_argument("--value", default="x")

    def run(self, args):
        if self._error is not None:
            raise self._error
        return dict(self._payload)


def _run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestPipelineEngine:
    """Tests pour PipelineEngine."""

    def test_register_and_dispatch(self):
        """Test d'enregistrement et d'exécution d'un pipeline."""
        engine = PipelineEngine()
        engine.register(_StubPipeline("stub", payload={"answer": 42}))
        report = engine.dispatch("stub", argparse.Namespace(value="x"))
        assert report.status == "ok"
        assert report.payload == {"answer": 42}
        assert "arguments" in report.input_digests

    def test_duplicate_name(self):
        """Test d'un nom déjà enregistré."""
        engine = PipelineEngine()
        engine.register(_StubPipeline("stub"))
        with pytest.raises(ValueError):
            engine.register(_StubPipeline("stub"))

    def test_unknown_subcommand(self):
        """Test d'une sous-commande inconnue."""
        engine = PipelineEngine()
        with pytest.raises(UnknownSubcommand):
            engine.get("missing")
        assert engine.dispatch("missing", argparse.Namespace()).status == "input_error"

    def test_input_error_status(self):
        """Test de la conversion d'une InputError."""
        engine = PipelineEngine()
        engine.register(_StubPipeline("bad", error=MalformedInput("entrée cassée")))
        report = engine.dispatch("bad", argparse.Namespace())
        assert report.status == "input_error"
        assert report.exit_code == 2
        assert report.payload["error_type"] == "MalformedInput"

    def test_property_failure_status(self):
        """Test de la conversion d'une PropertyFailure avec témoin."""
        engine = PipelineEngine()
        engine.register(_StubPipeline("fail", error=FourPointViolation((1, 2, 3, 4))))
        report = engine.dispatch("fail", argparse.Namespace())
        assert report.status == "property_failed"
        assert report.payload["witness"] == {"quadruple": [1, 2, 3, 4]}

    def test_failed_certificate(self):
        """Test d'un certificat faux dans le résultat."""
        engine = PipelineEngine()
        payload = {"certificate": {"ok": False, "failures": [{"cell": 0}]}}
        engine.register(_StubPipeline("cert", payload=payload))
        report = engine.dispatch("cert", argparse.Namespace())
        assert report.status == "property_failed"
        assert report.payload["witness"] == [{"cell": 0}]

    def test_all_pipelines_registered(self):
        """Test de l'enregistrement des sous-commandes."""
        engine = build_engine()
        assert len(engine.names()) == len(ALL_PIPELINES)
        for name in ("subdivide", "dual-graph", "facets", "star-scan", "convert-fan", "enumerate"):
            assert name in engine.names()


class TestOutputs:
    """Tests pour les sorties JSON et texte."""

    def test_json_is_stable(self):
        """Test de la stabilité des octets JSON."""
        first = RunReport("x", {"arguments": "h"}, {"b": 1, "a": [1, 2]}, elapsed_seconds=0.1)
        second = RunReport("x", {"arguments": "h"}, {"a": [1, 2], "b": 1}, elapsed_seconds=9.0)
        assert emit(first) == emit(second)
        assert b"elapsed" not in emit(first)

    def test_failure_contains_witness(self):
        """Test de la présence du témoin dans un rapport en échec."""
        report = RunReport("tree", {}, {"witness": {"quadruple": [1, 2, 3, 4]}}, "property_failed")
        data = json.loads(emit(report))
        assert data["status"] == "property_failed"
        assert data["payload"]["witness"] == {"quadruple": [1, 2, 3, 4]}

    def test_text_adjacency(self):
        """Test de la liste d'adjacence en texte."""
        report = RunReport("dual-graph", {}, {"adjacency": {"0": [1], "1": [0]}})
        text = emit(report, "text").decode("utf-8")
        assert text.startswith("dual-graph: ok\nadjacence:\n  0: 1\n  1: 0\n")


class TestSettings:
    """Tests pour la configuration par variables d'environnement."""

    def test_defaults(self, monkeypatch):
        """Test des valeurs par défaut."""
        for key in ("TROPICAL_WORKERS", "TROPICAL_LOG_LEVEL", "TROPICAL_MAX_FACTORS", "TROPICAL_OUTPUT_FORMAT"):
            monkeypatch.delenv(key, raising=False)
        settings = load_settings()
        assert settings == Settings(data_dir=settings.data_dir)

    def test_environment(self, monkeypatch):
        """Test de lecture de l'environnement."""
        monkeypatch.setenv("TROPICAL_WORKERS", "4")
        monkeypatch.setenv("TROPICAL_LOG_LEVEL", "debug")
        monkeypatch.setenv("TROPICAL_OUTPUT_FORMAT", "text")
        settings = load_settings()
        assert settings.workers == 4
        assert settings.log_level == "DEBUG"
        assert settings.output_format == "text"

    def test_invalid_values(self, monkeypatch):
        """Test de valeurs invalides."""
        monkeypatch.setenv("TROPICAL_WORKERS", "beaucoup")
        with pytest.raises(ValueError):
            load_settings()
        with pytest.raises(ValueError):
            Settings(workers=0)
        with pytest.raises(ValueError):
            Settings(log_level="VERBOSE")


class TestMain:
    """Tests de bout en bout de la CLI."""

    def test_subdivide_intro(self, capsys):
        """Test de la subdivision en sept cellules."""
        code, out = _run_cli(capsys, "subdivide", "--weight", str(DATA_DIR / "intro_w.json"))
        assert code == 0
        data = json.loads(out)
        assert data["status"] == "ok"
        assert data["payload"]["cell_count"] == 7
        assert data["payload"]["certificate"]["ok"]

    def test_output_is_deterministic(self, capsys):
        """Test de deux exécutions identiques."""
        _, first = _run_cli(capsys, "named", "fano")
        _, second = _run_cli(capsys, "named", "fano")
        assert first == second

    def test_dual_graph_text(self, capsys):
        """Test de la sortie texte du graphe dual."""
        code, out = _run_cli(capsys, "--format", "text", "dual-graph", "--weight", str(DATA_DIR / "intro_w.json"))
        assert code == 0
        assert "adjacence:" in out

    def test_valuation(self, capsys):
        """Test de la valuation de la matrice de Fano."""
        code, out = _run_cli(capsys, "valuation", "--matrix", str(DATA_DIR / "fano_matrix.json"))
        assert code == 0
        assert json.loads(out)["payload"]["support"] == ["124", "135", "167", "236", "257", "347", "456"]

    def test_malformed_json(self, capsys, tmp_path):
        """Test d'un fichier JSON invalide : code 2."""
        path = tmp_path / "w.json"
        path.write_text("{pas du json", encoding="utf-8")
        code, out = _run_cli(capsys, "subdivide", "--weight", str(path))
        assert code == 2
        assert json.loads(out)["status"] == "input_error"

    def test_missing_file(self, capsys, tmp_path):
        """Test d'un fichier absent : code 2."""
        code, _ = _run_cli(capsys, "subdivide", "--weight", str(tmp_path / "absent.json"))
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        """Test d'une sous-commande inconnue : code 2."""
        assert main(["frobnicate"]) == 2

    def test_bad_workers(self, capsys):
        """Test de --workers 0."""
        assert main(["--workers", "0", "named", "fano"]) == 2

    def test_tree_check_failure(self, capsys, tmp_path):
        """Test d'un poids violant les quatre points : code 1 et témoin."""
        path = tmp_path / "w.json"
        path.write_text(json.dumps({"d": 2, "n": 4, "entries": {"12": "-1"}}), encoding="utf-8")
        code, out = _run_cli(capsys, "tree", "check", "--weight", str(path))
        assert code == 1
        data = json.loads(out)
        assert data["status"] == "property_failed"
        assert data["payload"]["witness"] == [[1, 2, 3, 4]]

    def test_enumerate_expected(self, capsys):
        """Test du recensement avec valeur attendue."""
        assert _run_cli(capsys, "enumerate", "--d", "2", "--n", "4", "--expected", "7")[0] == 0
        assert _run_cli(capsys, "enumerate", "--d", "2", "--n", "4", "--expected", "8")[0] == 1

    def test_star_scan_tree_fan(self, capsys):
        """Test du balayage de l'origine de TGr(2,5)."""
        code, out = _run_cli(capsys, "star-scan", "--tree-fan", "5")
        assert code == 0
        assert json.loads(out)["payload"]["pairs_checked"] == 120

    def test_out_file(self, capsys, tmp_path):
        """Test de l'écriture dans un fichier."""
        target = tmp_path / "report.json"
        assert main(["--out", str(target), "named", "fig36"]) == 0
        assert json.loads(target.read_text(encoding="utf-8"))["subcommand"] == "named"

    def test_jacobian_max_factors_zero(self, capsys):
        """Test de --max-factors 0 : entrée invalide, code 2."""
        code, out = _run_cli(capsys, "jacobian", "--named", "fig36", "--basis", "1,2,3", "--max-factors", "0")
        assert code == 2
        assert json.loads(out)["status"] == "input_error"

    def test_jacobian_max_factors_from_environment(self, monkeypatch):
        """Test du repli sur TROPICAL_MAX_FACTORS hors de main()."""
        monkeypatch.setenv("TROPICAL_MAX_FACTORS", "2")
        args = argparse.Namespace(
            matroid=None, named="fig36", basis="1,2,3", vars=None, raw=False, max_factors=None, char=0,
        )
        report = build_engine().dispatch("jacobian", args)
        assert report.status == "ok"
        assert report.payload["max_factors"] == 2
