from oblivagg.cli.main import (  # noqa: F401
    COMMANDS,
    EXIT_AUDIT,
    EXIT_BUDGET,
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_PROTOCOL,
    build_parser,
    main,
    make_config,
)
