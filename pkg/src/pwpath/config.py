"""Defaults and rendering constants for pwpath."""

# Oracle search: stack bound B = ORACLE_STACK_BOUND_FACTOR * |V| * |A|
ORACLE_STACK_BOUND_FACTOR = 2
ORACLE_MAX_CONFIGURATIONS = 200_000

# Random instance generator
GEN_NODE_COUNT = 6
GEN_PROTOCOL_COUNT = 2
GEN_EDGE_PROBABILITY = 0.3
GEN_FUNCTION_DENSITY = 0.25
GEN_PASSIVE_FLOOR = 0.5
GEN_SEED = 0

SOURCE_NODE = "S"
DESTINATION_NODE = "D"
RELAY_PREFIX = "R"

# Bench sweep
BENCH_MIN_NODES = 4
BENCH_MAX_NODES = 10
BENCH_INSTANCES = 5
BENCH_WORKERS = 1

# Identifiers accepted for nodes and protocols
IDENTIFIER_PATTERN = r"^[A-Za-z0-9_.:-]+$"

# Symbol rendering
BAR = "\u0304"  # combining macron
ASCII_BAR = "~"
ASCII_INDEX = "_"
SUBSCRIPT_DIGITS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
EPSILON = "ε"
EMPTY_PUSH = "∅"
BOTTOM = "Z₀"
START_STATE = "S_A"
FINAL_STATE = "D_A"
AXIOM = "[S_G]"
