from .run_benchmark import BenchmarkOutcome, RunBenchmarkCommand, RunBenchmarkHandler, build_config

__all__ = ["BenchmarkOutcome", "RunBenchmarkCommand", "RunBenchmarkHandler", "build_config"]
