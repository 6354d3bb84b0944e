"""Frozen expected values for the census and puzzle machinery.

Exact reference counts for the four boards, frozen before the modules
they gate were written.  Tests compare against these with zero
tolerance; nothing here is regenerated from the code under test.
"""

# Solvable symmetric position counts per (symmetry type, position class).
ENGLISH_CENSUS = {
    (1, "A"): 13,
    (2, "A"): 25,
    (3, "A"): 22,
    (4, "A"): 220,
    (5, "A"): 2_238,
    (6, "A"): 5_139,
    (6, "C"): 15_187,
    (7, "A"): 34_501,
    (7, "B"): 92_732,
}
ENGLISH_CENSUS_TOTAL = 150_077

FRENCH_CENSUS_A = {
    (1, "A"): 17,
    (2, "A"): 27,
    (3, "A"): 126,
    (4, "A"): 258,
    (5, "A"): 7_051,
    (6, "A"): 40_722,
    (7, "A"): 113_375,
}

SQUARE_CENSUS = {
    (1, "A"): 21,
    (2, "A"): 79,
    (3, "A"): 238,
    (4, "A"): 76,
    (5, "A"): 9_148,
    (6, "A"): 64_135,
    (7, "A"): 20_961,
}
SQUARE_CENSUS_TOTAL = 94_658

# Solvable third-turn symmetric hexagon positions, by (type, class).
HEX_TEMPLATE_SWEEP = {
    (1, "A"): 20,
    (2, "A"): 14,
    (3, "A"): 30,
    (4, "A"): 87,
    (4, "B"): 185,
    (6, "A"): 330,
    (6, "B"): 754,
}

# Complement pairs inside the english33 class-A census cells.
ENGLISH_COMPLEMENT_PAIRS = {
    (1, "A"): 1,  # the start/finish pair of the central game
    (2, "A"): 0,
    (3, "A"): 0,
    (4, "A"): 0,
    (5, "A"): 0,
    (6, "A"): 99,
    (7, "A"): 456,
}

# Unique-winning-jump rows per peg count: n -> (max jumps, count).
ENGLISH_UNIQUE_JUMPS = {
    4: (4, 2), 5: (7, 1), 6: (7, 2), 7: (9, 2), 8: (9, 4), 9: (11, 1),
    10: (12, 1), 11: (12, 2), 12: (13, 4), 13: (14, 1), 14: (14, 4),
    15: (15, 1), 16: (15, 1), 17: (17, 1), 18: (15, 2), 19: (15, 2),
    20: (14, 3), 21: (13, 3), 22: (14, 1), 23: (11, 6), 24: (12, 1),
    25: (10, 1), 26: (7, 3), 27: (6, 2),
}

FRENCH_UNIQUE_JUMPS = {
    4: (4, 3), 5: (7, 1), 6: (8, 1), 7: (10, 1), 8: (10, 1), 9: (12, 1),
    10: (13, 1), 11: (14, 2), 12: (16, 1), 13: (17, 1), 14: (16, 4),
    15: (17, 2), 16: (19, 1), 17: (19, 2), 18: (18, 4), 19: (21, 1),
    20: (19, 1), 21: (18, 5), 22: (20, 1), 23: (18, 1), 24: (18, 2),
    25: (17, 1), 26: (17, 1), 27: (16, 1), 28: (13, 1), 29: (11, 1),
    30: (10, 3), 31: (6, 1), 32: (8, 1),
}

HEX_UNIQUE_JUMPS = {
    4: (6, 6), 5: (10, 2), 6: (10, 26), 7: (12, 10), 8: (14, 6),
    9: (16, 2), 10: (18, 1), 11: (18, 3), 12: (20, 1), 13: (20, 1),
    14: (22, 1), 15: (21, 2), 16: (21, 2), 17: (22, 1), 18: (22, 1),
    19: (20, 1), 20: (18, 3), 21: (17, 1), 22: (16, 2), 23: (13, 1),
    24: (12, 1),
}

# Peak level sizes (largest code count over all peg counts).
ENGLISH_A_PEAK = 3_626_632  # at 18 pegs
FRENCH_A_PEAK = 53_371_113  # at 20 pegs
HEX_A_PEAK = 364_696_466  # at 19 pegs
