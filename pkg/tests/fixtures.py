"""Hand-transcribed small transit functions used across the test suite.

Each entry gives the ground labels and the non-default transit sets; all
other pairs default to the endpoints.
"""

from transitgeo import GroundSet, make_transit_function


def build(labels, entries):
    ground = GroundSet(len(labels), tuple(labels))
    triples = [
        (ground.index(a), ground.index(b), ground.subset_of_labels(members))
        for (a, b), members in entries.items()
    ]
    return make_transit_function(ground, triples)


# Five points; convex geometry although neither monotone nor (j0).
def ex_not_monotone():
    return build(
        "abcde",
        {
            ("a", "c"): "abc",
            ("a", "d"): "abd",
            ("a", "e"): "abde",
            ("d", "e"): "dce",
            ("b", "d"): "bcd",
        },
    )


# Six points; monotone with (j0) and (b1) yet not a convex geometry.
def ex_monotone_not_geometry():
    return build(
        "abcdef",
        {
            ("a", "f"): "acf",
            ("c", "e"): "cbe",
            ("b", "d"): "bad",
        },
    )


# Four points; (ch) and (b1) but not (j0).
def ex_ch_b1_not_j0():
    return build(
        "abcd",
        {
            ("a", "c"): "abc",
            ("b", "d"): "bcd",
        },
    )


# Five points; (j0) and (b1) but not (ch).
def ex_j0_b1_not_ch():
    return build(
        "abcde",
        {
            ("a", "e"): "acde",
            ("c", "d"): "cbd",
            ("a", "b"): "aeb",
        },
    )


# Three points; (j0) and (ch) but not (b1).
def ex_j0_ch_not_b1():
    return build(
        "abc",
        {
            ("a", "c"): "abc",
            ("b", "c"): "bac",
        },
    )


# Seven points; (p), (b1), (j0) hold, (ch) fails, convex geometry.
def ex_peano_not_ch():
    return build(
        ("u", "x", "v", "y", "w", "s", "t"),
        {
            ("u", "v"): ("u", "x", "v"),
            ("x", "w"): ("x", "y", "w"),
            ("u", "w"): ("u", "s", "w"),
            ("v", "w"): ("v", "t", "w"),
            ("u", "t"): ("u", "y", "t"),
            ("v", "s"): ("v", "y", "s"),
        },
    )


# Four points; monotone with (ch),(j0),(b1),(a'),(k) whose transit-set
# system is not a convex geometry.
def ex_transit_system_not_geometry():
    return build(
        "abcd",
        {
            ("a", "d"): "abcd",
            ("b", "d"): "bcd",
        },
    )


# Four points; (m),(k),(ch),(j0),(b1) hold but (a') fails.
def ex_no_aprime():
    return build(
        "abcd",
        {
            ("a", "c"): "abc",
            ("a", "d"): "abd",
            ("c", "d"): "cbd",
        },
    )


# Five points; (m),(a'),(ch),(j0),(b1) hold but (k) fails.
def ex_no_k():
    return build(
        "abcde",
        {
            ("a", "e"): "abce",
            ("b", "d"): "bad",
            ("b", "e"): "bce",
            ("c", "d"): "cabd",
            ("d", "e"): "abcde",
        },
    )
