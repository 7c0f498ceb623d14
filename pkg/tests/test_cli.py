import logging

import pytest
from click.testing import CliRunner

from uniqdim.cli import cli
from uniqdim.constructions.base6 import find_base6
from uniqdim.graphs.formats import emit_graph6


@pytest.fixture(autouse=True)
def restore_root_logging():
    # the CLI installs stderr handlers bound to the runner's stream
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, input=None):
    return runner.invoke(cli, args, input=input, catch_exceptions=False)


def test_construct_then_bases(runner):
    built = invoke(runner, ['construct', '--family', 'order9'])
    assert built.exit_code == 0
    assert built.stdout.splitlines()[0] == "# family=order9 k=3 m=0 n=9"

    result = invoke(runner, ['bases', '-'], input=built.stdout)
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "dimension=3 bases=1 unique=true"
    assert "basis\t0,1,2" in lines


def test_construct_verify(runner):
    result = invoke(runner, ['construct', '--family', '3k', '--k', '3', '--verify'])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "# verified unique=true dimension=3"


def test_construct_edgelist(runner):
    result = invoke(runner, ['construct', '--family', '3k', '--k', '2', '--emit', 'edgelist'])
    lines = result.stdout.splitlines()
    assert lines[2] == "6 10"
    assert len(lines) == 13


def test_construct_needs_k(runner):
    result = invoke(runner, ['construct', '--family', 'kplus3k'])
    assert result.exit_code == 2


def test_dim_inline(runner):
    result = invoke(runner, ['dim', '--edges', '2 1 / 0 1'])
    assert result.exit_code == 0
    assert result.stdout == "n=2\tdiameter=1\tgirth=acyclic\tdimension=1\n"


def test_dim_stream(runner):
    result = invoke(runner, ['dim'], input=">>graph6<<Bw\nA_\n")
    assert result.stdout.splitlines() == [
        "n=3\tdiameter=1\tgirth=3\tdimension=2",
        "n=2\tdiameter=1\tgirth=acyclic\tdimension=1",
    ]


def test_bases_k3_randomly_k(runner):
    result = invoke(runner, ['bases', '--edges', '3 3; 0 1; 1 2; 0 2'])
    lines = result.stdout.splitlines()
    assert lines[:2] == ["dimension=2 bases=3 unique=false", "randomly_k\ttrue"]
    assert lines[2:] == ["basis\t0,1", "basis\t0,2", "basis\t1,2"]


def test_bases_disconnected(runner):
    result = invoke(runner, ['bases', '--edges', '3 1 / 0 1'])
    assert result.exit_code == 2


def test_search_n0(runner):
    result = invoke(runner, ['search-n0', '--k', '2', '--max-n', '6', '--dedup'])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "n0=6"


def test_search_n0_order_too_large(runner):
    result = invoke(runner, ['search-n0', '--k', '2', '--max-n', '9'])
    assert result.exit_code == 2


def test_search_n0_stream(runner, tmp_path):
    checkpoint = tmp_path / "scan.json"
    result = invoke(runner, ['search-n0', '--k', '2', '--stream', '-', '--checkpoint', str(checkpoint)],
                    input="Bw\nnot graph6!\n" + emit_graph6(find_base6().graph) + "\n")
    assert result.exit_code == 0
    assert "malformed\t1" in result.stdout.splitlines()
    assert result.stdout.splitlines()[-1] == "n0=6"
    assert checkpoint.exists()


def test_convert(runner):
    result = invoke(runner, ['convert', '--to', 'graph6', '--edges', '3 3 / 0 1 / 0 2 / 1 2'])
    assert result.stdout == "Bw\n"

    back = invoke(runner, ['convert', '--to', 'edgelist'], input="Bw\n")
    assert back.stdout == "3 3\n0 1\n0 2\n1 2\n"


def test_audit_passes(runner):
    result = invoke(runner, ['audit'], input="Bw\nA_\n")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("#graph6\tn\tk\td\tg\tunique\tdim_vs_diameter")
    assert lines[1].split('\t')[:6] == ["Bw", "3", "2", "1", "3", "false"]
    assert "summary\tgraphs=2\terrors=0\tfailed=0\tstopped_early=false" in lines


def test_audit_exhaustive(runner):
    result = invoke(runner, ['audit', '--exhaustive', '4', '--dedup'])
    assert result.exit_code == 0
    assert "summary\tgraphs=6\terrors=0\tfailed=0\tstopped_early=false" in result.stdout.splitlines()


def test_audit_disconnected_is_input_error(runner):
    result = invoke(runner, ['audit', '--edges', '3 1 / 0 1'])
    assert result.exit_code == 2
    assert any(line.startswith("ERROR\t") for line in result.stdout.splitlines())
    assert any(line.startswith("FAIL\t") for line in result.stdout.splitlines())


def test_audit_bad_graph6(runner):
    result = invoke(runner, ['audit', '--format', 'graph6'], input="A\n")
    assert result.exit_code == 2


def test_audit_edgelist_stream_keeps_going(runner):
    result = invoke(runner, ['audit', '--format', 'edgelist'], input="2 1\n0 1\n3 1\n0 5\n2 1\n0 1\n")
    assert result.exit_code == 2
    lines = result.stdout.splitlines()
    assert sum(line.startswith("A_\t") for line in lines) == 2
    assert any(line.startswith("ERROR\t<line 3>\t") for line in lines)
    assert "summary\tgraphs=3\terrors=1\tfailed=0\tstopped_early=false" in lines


def test_audit_two_sources(runner, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("Bw\n")
    result = invoke(runner, ['audit', str(path), '--edges', '2 1 / 0 1'])
    assert result.exit_code == 2


def test_extend_base6(runner):
    line = emit_graph6(find_base6().graph)
    result = invoke(runner, ['extend', '--m', '3'], input=line + "\n")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("# family=input k=2 m=3 n=9")
    assert lines[-1].startswith("verdict\tunique=true\tdimension=2\tbasis=")


def test_extend_rejects_non_unique(runner):
    result = invoke(runner, ['extend', '--m', '2', '--edges', '5 5 / 0 1 / 1 2 / 2 3 / 3 4 / 0 4'])
    assert result.exit_code == 2


def test_unknown_option_is_usage_error(runner):
    result = runner.invoke(cli, ['dim', '--bogus'])
    assert result.exit_code == 2


def test_jobs_must_be_positive(runner):
    result = runner.invoke(cli, ['--jobs', '0', 'dim', '--edges', '2 1 / 0 1'])
    assert result.exit_code == 2
