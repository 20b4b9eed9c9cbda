"""Published seed data for the additive constructions.

BASE_REPRESENTATIONS holds one known expression of each integer in
[123, 224] as a sum of distinct Ramanujan primes; BASE_PAIRINGS holds one
known perfect pairing of {1..2k} with Ramanujan-prime pair sums for each
solvable k <= 17.  Both are re-verified against certified sequence data
before use (see additive.verify_seed_tables); they are trusted for nothing.
"""

BASE_REPRESENTATIONS: dict[int, tuple[int, ...]] = {
    123: (71, 41, 11),
    124: (67, 29, 17, 11),
    125: (71, 41, 11, 2),
    126: (67, 59),
    127: (67, 47, 11, 2),
    128: (71, 29, 17, 11),
    129: (71, 47, 11),
    130: (71, 59),
    131: (67, 47, 17),
    132: (71, 59, 2),
    133: (67, 47, 17, 2),
    134: (59, 47, 17, 11),
    135: (71, 47, 17),
    136: (59, 47, 17, 11, 2),
    137: (71, 47, 17, 2),
    138: (71, 67),
    139: (67, 59, 11, 2),
    140: (71, 67, 2),
    141: (71, 59, 11),
    142: (71, 41, 17, 11, 2),
    143: (71, 59, 11, 2),
    144: (67, 47, 17, 11, 2),
    145: (67, 59, 17, 2),
    146: (71, 47, 17, 11),
    147: (71, 59, 17),
    148: (71, 47, 17, 11, 2),
    149: (71, 67, 11),
    150: (67, 41, 29, 11, 2),
    151: (71, 67, 11, 2),
    152: (71, 41, 29, 11),
    153: (101, 41, 11),
    154: (71, 41, 29, 11, 2),
    155: (71, 67, 17),
    156: (67, 59, 17, 11, 2),
    157: (71, 67, 17, 2),
    158: (71, 59, 17, 11),
    159: (71, 59, 29),
    160: (71, 59, 17, 11, 2),
    161: (71, 59, 29, 2),
    162: (67, 47, 29, 17, 2),
    163: (59, 47, 29, 17, 11),
    164: (71, 47, 29, 17),
    165: (59, 47, 29, 17, 11, 2),
    166: (71, 67, 17, 11),
    167: (71, 67, 29),
    168: (71, 67, 17, 11, 2),
    169: (71, 67, 29, 2),
    170: (71, 59, 29, 11),
    171: (71, 59, 41),
    172: (71, 59, 29, 11, 2),
    173: (71, 59, 41, 2),
    174: (67, 59, 29, 17, 2),
    175: (67, 59, 47, 2),
    176: (59, 47, 41, 29),
    177: (59, 47, 41, 17, 11, 2),
    178: (71, 67, 29, 11),
    179: (71, 67, 41),
    180: (71, 67, 29, 11, 2),
    181: (71, 67, 41, 2),
    182: (71, 59, 41, 11),
    183: (67, 59, 29, 17, 11),
    184: (71, 67, 29, 17),
    185: (71, 67, 47),
    186: (71, 67, 29, 17, 2),
    187: (71, 67, 47, 2),
    188: (71, 59, 47, 11),
    189: (71, 59, 29, 17, 11, 2),
    190: (71, 67, 41, 11),
    191: (101, 71, 17, 2),
    192: (71, 67, 41, 11, 2),
    193: (59, 47, 41, 29, 17),
    194: (71, 59, 47, 17),
    195: (71, 67, 29, 17, 11),
    196: (71, 67, 47, 11),
    197: (71, 67, 59),
    198: (71, 67, 47, 11, 2),
    199: (71, 67, 59, 2),
    200: (71, 59, 41, 29),
    201: (71, 59, 41, 17, 11, 2),
    202: (71, 67, 47, 17),
    203: (67, 59, 47, 17, 11, 2),
    204: (71, 67, 47, 17, 2),
    205: (71, 59, 47, 17, 11),
    206: (71, 59, 47, 29),
    207: (71, 67, 41, 17, 11),
    208: (71, 67, 59, 11),
    209: (71, 67, 41, 17, 11, 2),
    210: (71, 67, 41, 29, 2),
    211: (71, 59, 41, 29, 11),
    212: (67, 47, 41, 29, 17, 11),
    213: (71, 67, 47, 17, 11),
    214: (71, 67, 59, 17),
    215: (71, 67, 47, 17, 11, 2),
    216: (71, 67, 59, 17, 2),
    217: (71, 59, 47, 29, 11),
    218: (71, 59, 47, 41),
    219: (71, 67, 41, 29, 11),
    220: (71, 59, 47, 41, 2),
    221: (71, 67, 41, 29, 11, 2),
    222: (97, 71, 41, 11, 2),
    223: (71, 59, 47, 29, 17),
    224: (67, 59, 41, 29, 17, 11),
}

BASE_PAIRINGS: dict[int, tuple[tuple[int, int], ...]] = {
    5: ((1, 10), (2, 9), (3, 8), (4, 7), (5, 6)),
    6: ((1, 10), (2, 9), (3, 8), (4, 7), (5, 12), (6, 11)),
    8: ((1, 16), (2, 15), (3, 14), (4, 13), (5, 12), (6, 11), (7, 10), (8, 9)),
    9: ((1, 10), (2, 9), (3, 8), (4, 7), (5, 6),
        (11, 18), (12, 17), (13, 16), (14, 15)),
    11: ((1, 10), (2, 9), (3, 8), (4, 7), (5, 6),
         (11, 18), (12, 17), (13, 16), (14, 15),
         (19, 22), (20, 21)),
    12: ((1, 10), (2, 9), (3, 8), (4, 7), (5, 6),
         (11, 18), (12, 17), (13, 16), (14, 15),
         (19, 22), (20, 21), (23, 24)),
    14: ((1, 10), (2, 9), (3, 8), (4, 7), (5, 6),
         (11, 18), (12, 17), (13, 16), (14, 15),
         (19, 28), (20, 27), (21, 26), (22, 25), (23, 24)),
    15: ((1, 10), (2, 9), (3, 8), (4, 7), (5, 6),
         (11, 18), (12, 17), (13, 16), (14, 15),
         (19, 28), (20, 27), (21, 26), (22, 25), (23, 24), (29, 30)),
    17: ((1, 10), (2, 9), (3, 8), (4, 7), (5, 6),
         (11, 18), (12, 17), (13, 16), (14, 15),
         (19, 22), (20, 21), (23, 24),
         (25, 34), (26, 33), (27, 32), (28, 31), (29, 30)),
}

# residual sizes j-1 the pairing recursion can delegate to a base table
SOLVABLE_RESIDUALS = frozenset({10, 12, 16, 18, 22, 24, 28, 30})
