import runpy
from pathlib import Path

BENCH = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"


def test_benchmark_smoke(capsys):
    module = runpy.run_path(str(BENCH))
    module["main"](["--repeat", "1", "--quick"])
    out = capsys.readouterr().out
    assert "coreset_labels n=64" in out and "python" in out
