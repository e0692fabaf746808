# config/reference_data.py

# Known q-minimal orders for every prime power q < 30, split by whether the
# order is q-good. "unipotent" is the order of a unipotent element (p).
REFERENCE_ORDERS_TABLE = {
    2: {"unipotent": 2, "good": [3], "not_good": []},
    3: {"unipotent": 3, "good": [], "not_good": [2]},
    4: {"unipotent": 2, "good": [5], "not_good": []},
    5: {"unipotent": 5, "good": [3], "not_good": [2]},
    7: {"unipotent": 7, "good": [2, 3], "not_good": [4]},
    8: {"unipotent": 2, "good": [7, 9], "not_good": []},
    9: {"unipotent": 3, "good": [5], "not_good": [4]},
    11: {"unipotent": 11, "good": [3, 5], "not_good": [2, 6]},
    13: {"unipotent": 13, "good": [3, 7], "not_good": [2, 6]},
    16: {"unipotent": 2, "good": [15, 17], "not_good": []},
    17: {"unipotent": 17, "good": [2, 3, 4, 9], "not_good": [8]},
    19: {"unipotent": 19, "good": [3, 5, 9], "not_good": [2, 10]},
    23: {"unipotent": 23, "good": [2, 3, 6, 11], "not_good": [4, 12]},
    25: {"unipotent": 5, "good": [6, 13], "not_good": [4, 12]},
    27: {"unipotent": 3, "good": [7, 13], "not_good": [14]},
    29: {"unipotent": 29, "good": [3, 5, 7, 15], "not_good": [2, 14]},
}

VERIFICATION_CONFIG = {
    "class_squares": {
        # every non-identity class is reconciled against the brute-force oracle
        "q_values": [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27],
    },
    "generation": {
        "q_values": [4, 5, 7, 8, 9, 11, 13, 16, 17],
    },
    "trace_counts": {
        "q_max": 49,
    },
    "element_counts": {
        "q_max": 27,
    },
    "unipotent_invariant": {
        "q_max": 17,
    },
    "realization": {
        "exhaustive_q_max": 9,
        "random_triples": 500,
    },
}
