from .report import (
    RECORD_HEADER,
    SPEEDUP_HEADER,
    SpeedupRow,
    emit_csv,
    format_csv,
    read_records,
    read_speedup,
    speedup_report,
)
from .runner import (
    BenchmarkError,
    MapStore,
    MissingMapError,
    NondeterminismError,
    OptimalityViolation,
    RunRecord,
    run_benchmark,
)
from .scenarios import (
    Scenario,
    ScenarioFormatError,
    format_scen,
    generate_empty_problems,
    load_scen,
    parse_scen,
    save_scen,
)
