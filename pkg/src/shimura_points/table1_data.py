"""Golden values for the trace-set table, transcribed as printed.

Each entry maps ``(N, e)`` to ``(C, D, P)``; a ``±x`` entry in the printed
table contributes both ``x`` and ``-x``.
"""

TABLE1 = {
    (2, 2): (
        {0, -3, -4},
        {0, 1, -1, 2, -2, -3, 4, -4, -5, -6, -7, -8, -12},
        {2, 3, 5, 7},
    ),
    (2, 4): (
        {1, 8, -8},
        {0, 1, -3, 4, -4, 5, -7, 8, -8, 9, 12, -12, 16, -16, -47},
        {2, 3, 5, 7, 47},
    ),
    (2, 6): (
        {0, 9, -16},
        {0, 1, -7, 8, -8, 9, 16, -16, 17, -24, 25, -32, 64, -111, -192},
        {2, 3, 5, 7, 17, 37},
    ),
    (2, 8): (
        {-31, 32},
        {0, 1, -15, 16, -31, 32, -47, 48, -63, 64, 193, 256},
        {2, 3, 5, 7, 31, 47, 193},
    ),
    (2, 10): (
        {0, 57, -64},
        {0, -7, 25, 32, -32, 57, 64, -64, 89, -96, 121, -128, 177, 1024, -3072},
        {2, 3, 5, 7, 11, 19, 59, 89},
    ),
    (2, 12): (
        {-47, 128, -128},
        {0, 17, -47, 64, -64, 81, -111, 128, -128, -175, 192, -192,
         256, -256, 4096, -10079},
        {2, 3, 5, 7, 17, 37, 47, 10079},
    ),
    (2, 14): (
        {0, -87, -256},
        {0, 41, -87, 128, -128, 169, -215, 256, -256, -343, -384, -512,
         16384, -41583, -49152},
        {2, 3, 5, 7, 13, 29, 41, 43, 83, 167},
    ),
    (2, 16): (
        {449, 512},
        {0, -63, 193, 256, 449, 512, 705, 768, 961, 1024, 4993, 65536},
        {2, 3, 5, 7, 31, 47, 193, 449, 4993},
    ),
    (3, 2): (
        {-2, 3, -5, -6},
        {0, 1, -2, 3, -3, 4, -5, 6, -6, -8, 9, -9, -11, -12, -18, -23},
        {2, 3, 5, 11, 23},
    ),
    (3, 4): (
        {7, -9, -14, 18},
        {0, -2, 4, -5, 7, 9, -9, -11, -14, 16, 18, -18, -23, 25, 27, -27,
         -32, 36, -47, 81, -162, -194},
        {2, 3, 5, 7, 11, 23, 47, 97},
    ),
    (3, 6): (
        {10, 46, -54},
        {0, -8, 10, -17, 19, -27, 37, -44, 46, -54, 64, -71, 73, -81, 100,
         -108, 729, -2087},
        {2, 3, 5, 11, 17, 19, 23, 37, 71, 73, 2087},
    ),
    (3, 8): (
        {34, -81, -113, 162},
        {0, -32, 34, -47, 49, 81, -81, -113, 115, -128, 162, -162, -194,
         196, 243, -243, -275, 324, 6561, -6914, -13122, -18527},
        {2, 3, 5, 7, 11, 17, 23, 47, 97, 113, 191, 3457},
    ),
    (3, 10): (
        {243, 475, -482, -486},
        {0, 4, -11, 232, -239, 243, -243, 475, -482, 486, -486, 718, -725,
         729, -729, 961, -968, -972, 48478, 55177, 59049, -118098},
        {2, 3, 5, 11, 19, 23, 29, 31, 239, 241, 359, 2399, 24239},
    ),
    (3, 12): (
        {658, -1358, 1458},
        {0, -71, 100, -629, 658, 729, -800, -1358, 1387, 1458, -2087, 2116,
         2187, -2816, 2916, 249841, 531441, -1161359},
        {2, 3, 5, 7, 11, 17, 19, 23, 37, 47, 71, 73, 97, 433, 577, 1009,
         1151, 2087},
    ),
    (3, 14): (
        {2187, 2515, 3022, -4374},
        {0, 328, 835, -1352, -1859, 2187, -2187, 2515, 3022, 4374, -4374,
         4702, 5209, 6561, -6561, 6889, 7396, -8748, 4782969, -5216423,
         -8023682, -9565938},
        {2, 3, 5, 11, 13, 23, 41, 43, 83, 167, 337, 503, 673, 1511, 2351,
         5209, 24023},
    ),
    (3, 16): (
        {-353, -6561, -11966, 13122},
        {0, -353, 1156, -5405, 6208, 6561, -6561, -6914, -11966, 12769,
         13122, -13122, -13475, -18527, 19683, -19683, -25088, 26244,
         14044993, 43046721, -86093442, -129015554},
        {2, 3, 5, 7, 11, 17, 23, 31, 47, 97, 113, 191, 193, 353, 383, 2113,
         3457, 30529, 36671},
    ),
}
