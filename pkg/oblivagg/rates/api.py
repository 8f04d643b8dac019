from oblivagg.rates.rates import (  # noqa: F401
    classify,
    measure_rates,
    optimal_region,
    rates_table,
    verify_optimality,
)
