"""Exact solver and classifier for the vertex coloring game on forests."""

from gamechrom._core import (
    Forest,
    GameState,
    Player,
    Position,
    Ruleset,
    Winner,
    b_vertex_search,
    bob_wins_within,
    canonical_form,
    caterpillar,
    classify,
    forests_of_order,
    game_chromatic_number,
    is_chi_g_2,
    load_position,
    longest_path_length,
    parse_position,
    path_graph,
    position_text,
    solve,
    spider,
    star,
    t_prime,
    trees_of_order,
    twelve_vertex_example,
)

__all__ = [
    "Forest",
    "GameState",
    "Player",
    "Position",
    "Ruleset",
    "Winner",
    "b_vertex_search",
    "bob_wins_within",
    "canonical_form",
    "caterpillar",
    "classify",
    "forests_of_order",
    "game_chromatic_number",
    "is_chi_g_2",
    "load_position",
    "longest_path_length",
    "parse_position",
    "path_graph",
    "position_text",
    "solve",
    "spider",
    "star",
    "t_prime",
    "trees_of_order",
    "twelve_vertex_example",
]
