"""Published operating characteristics used as regression targets for the
Monte Carlo acceptance sweep.

Keyed by (method, n_levels, n_max, scenario_index).  Values: per-level
selection percentages, per-level mean allocated volunteers, early
termination percentage, and mean (sd) of total enrollment.
"""

REFERENCE = {
    ('blrm', 3, 18, 1): {"sel": [78.2, 18.6, 2.6], "alloc": [8.7, 5.0, 4.2], "early": 0.6, "total_mean": 18.0, "total_sd": 0.6},
    ('blrm', 3, 18, 2): {"sel": [3.2, 22.9, 61.1], "alloc": [4.4, 5.2, 7.9], "early": 12.8, "total_mean": 17.5, "total_sd": 1.6},
    ('blrm', 3, 18, 3): {"sel": [0.0, 1.3, 39.7], "alloc": [4.0, 4.1, 7.5], "early": 59.0, "total_mean": 15.6, "total_sd": 2.7},
    ('blrm', 3, 18, 4): {"sel": [30.3, 44.9, 23.1], "alloc": [6.2, 6.0, 5.7], "early": 1.7, "total_mean": 17.9, "total_sd": 0.8},
    ('blrm', 3, 18, 5): {"sel": [20.8, 31.6, 41.9], "alloc": [5.5, 5.6, 6.7], "early": 5.7, "total_mean": 17.8, "total_sd": 1.0},
    ('blrm', 3, 18, 6): {"sel": [38.5, 25.5, 32.6], "alloc": [6.4, 5.4, 6.1], "early": 3.4, "total_mean": 17.9, "total_sd": 0.8},
    ('blrm', 3, 18, 7): {"sel": [4.8, 13.3, 60.1], "alloc": [4.5, 4.8, 8.0], "early": 21.8, "total_mean": 17.3, "total_sd": 1.8},
    ('blrm', 3, 18, 8): {"sel": [85.1, 10.3, 3.9], "alloc": [8.9, 4.8, 4.4], "early": 0.7, "total_mean": 18.0, "total_sd": 0.6},
    ('blrm', 3, 24, 1): {"sel": [81.6, 16.9, 0.8], "alloc": [11.1, 6.8, 6.0], "early": 0.7, "total_mean": 23.9, "total_sd": 1.1},
    ('blrm', 3, 24, 2): {"sel": [1.5, 20.5, 61.3], "alloc": [6.2, 7.3, 9.7], "early": 16.7, "total_mean": 23.2, "total_sd": 2.2},
    ('blrm', 3, 24, 3): {"sel": [0.0, 0.3, 30.9], "alloc": [6.0, 6.1, 8.4], "early": 68.8, "total_mean": 20.4, "total_sd": 3.0},
    ('blrm', 3, 24, 4): {"sel": [28.8, 50.8, 20.0], "alloc": [8.1, 8.5, 7.3], "early": 0.4, "total_mean": 23.9, "total_sd": 1.3},
    ('blrm', 3, 24, 5): {"sel": [17.6, 38.0, 39.8], "alloc": [7.3, 8.1, 8.3], "early": 4.6, "total_mean": 23.8, "total_sd": 1.5},
    ('blrm', 3, 24, 6): {"sel": [35.2, 32.0, 30.5], "alloc": [8.3, 7.9, 7.7], "early": 2.3, "total_mean": 23.9, "total_sd": 1.3},
    ('blrm', 3, 24, 7): {"sel": [3.8, 12.5, 59.2], "alloc": [6.3, 7.1, 9.7], "early": 24.5, "total_mean": 23.0, "total_sd": 2.3},
    ('blrm', 3, 24, 8): {"sel": [88.6, 8.4, 2.1], "alloc": [11.3, 6.5, 6.1], "early": 0.9, "total_mean": 23.9, "total_sd": 1.2},
    ('blrm', 3, 30, 1): {"sel": [85.0, 14.0, 0.1], "alloc": [13.0, 9.0, 8.0], "early": 0.9, "total_mean": 29.9, "total_sd": 1.4},
    ('blrm', 3, 30, 2): {"sel": [1.1, 16.8, 64.4], "alloc": [8.1, 9.1, 12.0], "early": 17.7, "total_mean": 29.1, "total_sd": 2.5},
    ('blrm', 3, 30, 3): {"sel": [0.0, 0.5, 25.0], "alloc": [8.0, 8.0, 9.9], "early": 74.5, "total_mean": 25.9, "total_sd": 3.0},
    ('blrm', 3, 30, 4): {"sel": [26.0, 51.0, 21.4], "alloc": [9.6, 11.0, 9.3], "early": 1.6, "total_mean": 29.8, "total_sd": 1.6},
    ('blrm', 3, 30, 5): {"sel": [14.9, 39.1, 41.9], "alloc": [9.0, 10.2, 10.6], "early": 4.1, "total_mean": 29.7, "total_sd": 1.8},
    ('blrm', 3, 30, 6): {"sel": [32.1, 36.6, 28.8], "alloc": [10.0, 10.2, 9.6], "early": 2.5, "total_mean": 29.8, "total_sd": 1.6},
    ('blrm', 3, 30, 7): {"sel": [1.8, 11.3, 60.1], "alloc": [8.2, 8.9, 11.8], "early": 26.8, "total_mean": 28.9, "total_sd": 2.6},
    ('blrm', 3, 30, 8): {"sel": [89.0, 9.4, 0.8], "alloc": [13.2, 8.7, 8.0], "early": 0.8, "total_mean": 29.9, "total_sd": 1.4},
    ('blrm', 3, 40, 1): {"sel": [87.7, 11.1, 0.1], "alloc": [18.8, 11.1, 9.9], "early": 1.1, "total_mean": 39.8, "total_sd": 2.3},
    ('blrm', 3, 40, 2): {"sel": [0.3, 17.7, 61.3], "alloc": [10.1, 11.8, 16.4], "early": 20.7, "total_mean": 38.3, "total_sd": 4.2},
    ('blrm', 3, 40, 3): {"sel": [0.0, 0.1, 15.9], "alloc": [10.0, 10.0, 12.2], "early": 84.0, "total_mean": 32.2, "total_sd": 4.4},
    ('blrm', 3, 40, 4): {"sel": [22.6, 57.7, 17.5], "alloc": [12.6, 15.3, 11.8], "early": 2.2, "total_mean": 39.7, "total_sd": 2.8},
    ('blrm', 3, 40, 5): {"sel": [12.8, 43.1, 38.3], "alloc": [11.3, 14.1, 14.0], "early": 5.8, "total_mean": 39.5, "total_sd": 3.0},
    ('blrm', 3, 40, 6): {"sel": [33.2, 38.7, 25.4], "alloc": [13.2, 14.0, 12.5], "early": 2.7, "total_mean": 39.6, "total_sd": 2.7},
    ('blrm', 3, 40, 7): {"sel": [0.9, 8.8, 54.5], "alloc": [10.2, 11.0, 16.2], "early": 35.8, "total_mean": 37.4, "total_sd": 4.6},
    ('blrm', 3, 40, 8): {"sel": [91.6, 6.6, 0.5], "alloc": [19.0, 10.8, 10.0], "early": 1.3, "total_mean": 39.8, "total_sd": 2.4},
    ('blrm', 4, 24, 1): {"sel": [33.0, 47.4, 17.8, 1.7], "alloc": [7.1, 7.4, 5.1, 4.4], "early": 0.1, "total_mean": 24.0, "total_sd": 0.4},
    ('blrm', 4, 24, 2): {"sel": [0.1, 1.5, 12.5, 60.0], "alloc": [4.0, 4.2, 4.7, 9.4], "early": 25.9, "total_mean": 22.3, "total_sd": 3.1},
    ('blrm', 4, 24, 3): {"sel": [0.0, 0.1, 0.3, 20.1], "alloc": [4.0, 4.0, 4.0, 6.4], "early": 79.5, "total_mean": 18.5, "total_sd": 3.4},
    ('blrm', 4, 24, 4): {"sel": [1.6, 25.0, 42.8, 28.5], "alloc": [4.4, 6.4, 6.2, 6.9], "early": 2.1, "total_mean": 23.9, "total_sd": 1.1},
    ('blrm', 4, 24, 5): {"sel": [1.4, 16.6, 27.2, 45.4], "alloc": [4.2, 5.6, 5.6, 8.1], "early": 9.4, "total_mean": 23.5, "total_sd": 1.8},
    ('blrm', 4, 24, 6): {"sel": [13.6, 31.8, 19.0, 32.3], "alloc": [5.1, 6.7, 5.5, 6.6], "early": 3.3, "total_mean": 23.9, "total_sd": 1.0},
    ('blrm', 4, 24, 7): {"sel": [0.6, 4.4, 7.2, 54.2], "alloc": [4.1, 4.5, 4.7, 9.0], "early": 33.6, "total_mean": 22.3, "total_sd": 3.0},
    ('blrm', 4, 24, 8): {"sel": [65.4, 27.1, 5.5, 1.7], "alloc": [8.8, 6.4, 4.6, 4.2], "early": 0.3, "total_mean": 24.0, "total_sd": 0.6},
    ('blrm', 4, 30, 1): {"sel": [28.8, 55.9, 14.1, 0.9], "alloc": [8.6, 9.8, 6.3, 5.3], "early": 0.3, "total_mean": 30.0, "total_sd": 0.2},
    ('blrm', 4, 30, 2): {"sel": [0.0, 0.5, 12.1, 59.0], "alloc": [5.0, 5.1, 6.1, 11.5], "early": 28.4, "total_mean": 27.7, "total_sd": 4.0},
    ('blrm', 4, 30, 3): {"sel": [0.0, 0.0, 0.1, 15.1], "alloc": [5.0, 5.0, 5.0, 7.2], "early": 84.8, "total_mean": 22.2, "total_sd": 3.8},
    ('blrm', 4, 30, 4): {"sel": [1.0, 23.1, 44.7, 27.8], "alloc": [5.2, 7.5, 8.6, 8.3], "early": 3.4, "total_mean": 29.7, "total_sd": 2.0},
    ('blrm', 4, 30, 5): {"sel": [0.6, 13.3, 29.4, 47.5], "alloc": [5.1, 6.7, 7.5, 10.0], "early": 9.2, "total_mean": 29.3, "total_sd": 2.6},
    ('blrm', 4, 30, 6): {"sel": [11.5, 29.7, 23.9, 31.5], "alloc": [6.3, 8.1, 7.0, 8.5], "early": 3.4, "total_mean": 29.8, "total_sd": 1.2},
    ('blrm', 4, 30, 7): {"sel": [0.0, 2.6, 6.7, 53.0], "alloc": [5.0, 5.3, 5.9, 11.3], "early": 37.7, "total_mean": 27.6, "total_sd": 4.0},
    ('blrm', 4, 30, 8): {"sel": [67.6, 27.3, 4.0, 1.1], "alloc": [11.5, 7.7, 5.5, 5.2], "early": 0.0, "total_mean": 30.0, "total_sd": 0.0},
    ('blrm', 4, 40, 1): {"sel": [29.1, 59.3, 10.0, 0.6], "alloc": [10.8, 12.2, 8.9, 8.0], "early": 1.0, "total_mean": 39.9, "total_sd": 1.6},
    ('blrm', 4, 40, 2): {"sel": [0.0, 0.1, 8.4, 58.4], "alloc": [8.0, 8.0, 8.6, 13.0], "early": 33.1, "total_mean": 37.7, "total_sd": 3.9},
    ('blrm', 4, 40, 3): {"sel": [0.0, 0.0, 0.1, 7.1], "alloc": [8.0, 8.0, 7.9, 8.9], "early": 92.8, "total_mean": 32.8, "total_sd": 2.8},
    ('blrm', 4, 40, 4): {"sel": [0.7, 20.7, 48.4, 27.9], "alloc": [8.1, 9.7, 11.5, 10.4], "early": 2.3, "total_mean": 39.7, "total_sd": 2.1},
    ('blrm', 4, 40, 5): {"sel": [0.0, 11.8, 33.8, 46.6], "alloc": [8.0, 9.0, 10.4, 12.0], "early": 7.8, "total_mean": 39.4, "total_sd": 2.6},
    ('blrm', 4, 40, 6): {"sel": [7.1, 35.4, 26.8, 28.3], "alloc": [8.7, 10.7, 10.2, 10.2], "early": 2.4, "total_mean": 39.8, "total_sd": 1.9},
    ('blrm', 4, 40, 7): {"sel": [0.0, 1.3, 7.2, 53.6], "alloc": [8.0, 8.1, 8.6, 13.0], "early": 37.9, "total_mean": 37.7, "total_sd": 3.7},
    ('blrm', 4, 40, 8): {"sel": [68.7, 27.5, 2.8, 0.9], "alloc": [13.3, 10.4, 8.2, 8.0], "early": 0.1, "total_mean": 40.0, "total_sd": 0.8},
    ('blrm', 5, 30, 1): {"sel": [33.7, 57.8, 7.8, 0.3, 0.0], "alloc": [8.4, 8.7, 4.9, 4.0, 3.9], "early": 0.4, "total_mean": 30.0, "total_sd": 0.6},
    ('blrm', 5, 30, 2): {"sel": [0.0, 0.6, 19.0, 40.7, 32.8], "alloc": [4.0, 4.2, 5.8, 6.9, 8.3], "early": 6.9, "total_mean": 29.3, "total_sd": 2.8},
    ('blrm', 5, 30, 3): {"sel": [0.0, 0.0, 0.0, 0.5, 17.3], "alloc": [4.0, 4.0, 4.0, 4.0, 6.6], "early": 82.2, "total_mean": 22.6, "total_sd": 4.2},
    ('blrm', 5, 30, 4): {"sel": [1.9, 33.5, 43.5, 18.6, 1.7], "alloc": [4.5, 7.4, 8.0, 5.5, 4.5], "early": 0.8, "total_mean": 29.9, "total_sd": 1.2},
    ('blrm', 5, 30, 5): {"sel": [0.1, 0.6, 11.6, 21.6, 49.5], "alloc": [4.0, 4.1, 5.1, 5.7, 9.7], "early": 16.9, "total_mean": 28.7, "total_sd": 3.4},
    ('blrm', 5, 30, 6): {"sel": [8.1, 25.6, 22.8, 15.4, 25.6], "alloc": [4.9, 6.3, 6.6, 5.5, 6.6], "early": 2.5, "total_mean": 29.9, "total_sd": 0.9},
    ('blrm', 5, 30, 7): {"sel": [0.0, 2.2, 4.5, 8.0, 50.2], "alloc": [4.0, 4.2, 4.8, 5.0, 9.9], "early": 35.1, "total_mean": 27.9, "total_sd": 3.6},
    ('blrm', 5, 30, 8): {"sel": [62.5, 30.5, 4.3, 1.5, 1.0], "alloc": [9.8, 7.0, 5.0, 4.1, 4.1], "early": 0.2, "total_mean": 30.0, "total_sd": 0.9},
    ('blrm', 5, 40, 1): {"sel": [36.0, 58.5, 4.8, 0.1, 0.0], "alloc": [10.4, 11.2, 6.5, 6.0, 5.9], "early": 0.6, "total_mean": 39.9, "total_sd": 1.4},
    ('blrm', 5, 40, 2): {"sel": [0.0, 0.1, 13.7, 46.3, 33.2], "alloc": [6.0, 6.1, 7.4, 9.6, 10.2], "early": 6.7, "total_mean": 39.3, "total_sd": 3.2},
    ('blrm', 5, 40, 3): {"sel": [0.0, 0.0, 0.0, 0.7, 11.9], "alloc": [6.0, 6.0, 6.0, 6.0, 7.8], "early": 87.4, "total_mean": 31.8, "total_sd": 4.0},
    ('blrm', 5, 40, 4): {"sel": [0.6, 32.3, 50.3, 14.2, 1.5], "alloc": [6.2, 9.6, 10.5, 7.3, 6.2], "early": 1.1, "total_mean": 39.8, "total_sd": 2.0},
    ('blrm', 5, 40, 5): {"sel": [0.0, 0.1, 8.7, 23.2, 51.4], "alloc": [6.0, 6.0, 6.8, 8.0, 11.7], "early": 16.6, "total_mean": 38.6, "total_sd": 3.9},
    ('blrm', 5, 40, 6): {"sel": [5.0, 28.7, 24.4, 18.1, 22.0], "alloc": [6.7, 8.5, 8.8, 7.8, 8.1], "early": 1.8, "total_mean": 39.8, "total_sd": 1.8},
    ('blrm', 5, 40, 7): {"sel": [0.0, 0.8, 3.7, 8.7, 48.0], "alloc": [6.0, 6.1, 6.5, 7.0, 11.7], "early": 38.8, "total_mean": 37.3, "total_sd": 4.4},
    ('blrm', 5, 40, 8): {"sel": [62.9, 30.7, 4.5, 1.2, 0.6], "alloc": [12.1, 9.2, 6.6, 6.1, 6.0], "early": 0.1, "total_mean": 40.0, "total_sd": 0.2},
    ('bma', 3, 18, 1): {"sel": [84.4, 12.4, 2.6], "alloc": [8.9, 4.8, 4.2], "early": 0.6, "total_mean": 18.0, "total_sd": 0.6},
    ('bma', 3, 18, 2): {"sel": [6.2, 31.3, 40.8], "alloc": [4.8, 5.9, 6.2], "early": 21.7, "total_mean": 16.9, "total_sd": 2.3},
    ('bma', 3, 18, 3): {"sel": [0.0, 3.4, 27.4], "alloc": [4.0, 4.6, 5.7], "early": 69.2, "total_mean": 14.3, "total_sd": 2.8},
    ('bma', 3, 18, 4): {"sel": [44.7, 34.4, 18.3], "alloc": [6.9, 5.8, 5.2], "early": 2.6, "total_mean": 17.9, "total_sd": 1.0},
    ('bma', 3, 18, 5): {"sel": [33.5, 42.7, 16.3], "alloc": [6.4, 6.2, 4.9], "early": 7.5, "total_mean": 17.6, "total_sd": 1.5},
    ('bma', 3, 18, 6): {"sel": [62.0, 23.4, 10.7], "alloc": [7.9, 5.3, 4.6], "early": 3.9, "total_mean": 17.8, "total_sd": 1.1},
    ('bma', 3, 18, 7): {"sel": [24.9, 27.6, 20.7], "alloc": [5.9, 5.9, 5.0], "early": 26.8, "total_mean": 16.8, "total_sd": 2.3},
    ('bma', 3, 18, 8): {"sel": [92.7, 5.3, 1.4], "alloc": [9.5, 4.4, 4.1], "early": 0.6, "total_mean": 18.0, "total_sd": 0.6},
    ('bma', 3, 24, 1): {"sel": [87.6, 11.2, 0.6], "alloc": [11.3, 6.6, 6.0], "early": 0.6, "total_mean": 23.9, "total_sd": 1.1},
    ('bma', 3, 24, 2): {"sel": [4.0, 28.2, 43.7], "alloc": [6.4, 7.8, 8.6], "early": 24.1, "total_mean": 22.8, "total_sd": 2.6},
    ('bma', 3, 24, 3): {"sel": [0.0, 2.1, 20.8], "alloc": [6.0, 6.3, 7.6], "early": 77.1, "total_mean": 19.8, "total_sd": 2.8},
    ('bma', 3, 24, 4): {"sel": [37.6, 41.9, 17.1], "alloc": [8.7, 8.1, 7.0], "early": 3.4, "total_mean": 23.8, "total_sd": 1.5},
    ('bma', 3, 24, 5): {"sel": [31.3, 42.3, 18.8], "alloc": [8.2, 8.2, 7.1], "early": 7.6, "total_mean": 23.6, "total_sd": 1.8},
    ('bma', 3, 24, 6): {"sel": [62.0, 24.1, 9.6], "alloc": [9.8, 7.4, 6.6], "early": 4.3, "total_mean": 23.7, "total_sd": 1.5},
    ('bma', 3, 24, 7): {"sel": [22.9, 25.5, 19.5], "alloc": [7.6, 7.7, 7.1], "early": 32.1, "total_mean": 22.4, "total_sd": 2.7},
    ('bma', 3, 24, 8): {"sel": [94.9, 3.9, 0.5], "alloc": [11.6, 6.3, 6.0], "early": 0.7, "total_mean": 23.9, "total_sd": 1.2},
    ('bma', 3, 30, 1): {"sel": [88.2, 10.7, 0.3], "alloc": [13.4, 8.6, 8.0], "early": 0.8, "total_mean": 29.9, "total_sd": 1.4},
    ('bma', 3, 30, 2): {"sel": [2.5, 25.8, 44.5], "alloc": [8.4, 9.4, 10.7], "early": 27.2, "total_mean": 28.5, "total_sd": 2.9},
    ('bma', 3, 30, 3): {"sel": [0.0, 1.1, 16.8], "alloc": [8.0, 8.1, 9.2], "early": 82.1, "total_mean": 25.3, "total_sd": 2.7},
    ('bma', 3, 30, 4): {"sel": [36.4, 45.8, 15.9], "alloc": [10.7, 10.2, 8.9], "early": 1.9, "total_mean": 29.8, "total_sd": 1.6},
    ('bma', 3, 30, 5): {"sel": [29.5, 45.6, 16.7], "alloc": [10.2, 10.3, 9.0], "early": 8.2, "total_mean": 29.5, "total_sd": 2.0},
    ('bma', 3, 30, 6): {"sel": [63.2, 25.8, 7.7], "alloc": [12.0, 9.4, 8.4], "early": 3.3, "total_mean": 29.8, "total_sd": 1.7},
    ('bma', 3, 30, 7): {"sel": [18.9, 26.4, 16.1], "alloc": [9.5, 9.4, 9.1], "early": 38.6, "total_mean": 28.1, "total_sd": 3.0},
    ('bma', 3, 30, 8): {"sel": [96.0, 3.0, 0.4], "alloc": [13.8, 8.2, 7.9], "early": 0.6, "total_mean": 29.9, "total_sd": 1.4},
    ('bma', 3, 40, 1): {"sel": [90.5, 8.2, 0.3], "alloc": [19.2, 10.7, 10.0], "early": 1.0, "total_mean": 39.8, "total_sd": 2.4},
    ('bma', 3, 40, 2): {"sel": [1.6, 20.9, 48.9], "alloc": [10.4, 12.2, 14.9], "early": 28.6, "total_mean": 37.5, "total_sd": 4.7},
    ('bma', 3, 40, 3): {"sel": [0.0, 0.4, 10.1], "alloc": [10.0, 10.0, 11.5], "early": 89.5, "total_mean": 31.5, "total_sd": 3.9},
    ('bma', 3, 40, 4): {"sel": [31.0, 51.9, 15.1], "alloc": [13.7, 14.5, 11.5], "early": 2.0, "total_mean": 39.7, "total_sd": 2.7},
    ('bma', 3, 40, 5): {"sel": [24.2, 49.6, 17.6], "alloc": [13.1, 14.4, 11.7], "early": 8.6, "total_mean": 39.2, "total_sd": 3.2},
    ('bma', 3, 40, 6): {"sel": [64.3, 25.1, 6.1], "alloc": [16.7, 12.3, 10.5], "early": 4.5, "total_mean": 39.5, "total_sd": 2.9},
    ('bma', 3, 40, 7): {"sel": [12.9, 22.5, 17.7], "alloc": [11.8, 12.6, 11.7], "early": 46.9, "total_mean": 36.2, "total_sd": 5.0},
    ('bma', 3, 40, 8): {"sel": [96.1, 2.8, 0.2], "alloc": [19.6, 10.3, 9.9], "early": 0.9, "total_mean": 39.8, "total_sd": 2.3},
    ('bma', 4, 24, 1): {"sel": [39.6, 45.5, 12.6, 2.1], "alloc": [8.0, 6.8, 4.9, 4.4], "early": 0.2, "total_mean": 24.0, "total_sd": 0.3},
    ('bma', 4, 24, 2): {"sel": [0.0, 3.6, 18.9, 37.5], "alloc": [4.0, 4.4, 5.5, 7.3], "early": 40.0, "total_mean": 21.2, "total_sd": 3.7},
    ('bma', 4, 24, 3): {"sel": [0.0, 0.0, 1.6, 10.0], "alloc": [4.0, 4.0, 4.2, 5.3], "early": 88.4, "total_mean": 17.5, "total_sd": 3.0},
    ('bma', 4, 24, 4): {"sel": [4.3, 30.7, 38.0, 21.1], "alloc": [4.8, 6.4, 6.2, 6.1], "early": 5.9, "total_mean": 23.6, "total_sd": 1.7},
    ('bma', 4, 24, 5): {"sel": [3.5, 27.3, 34.1, 22.6], "alloc": [4.7, 6.1, 6.6, 5.8], "early": 12.5, "total_mean": 23.2, "total_sd": 2.4},
    ('bma', 4, 24, 6): {"sel": [29.5, 37.1, 17.9, 10.8], "alloc": [7.0, 6.5, 5.4, 4.8], "early": 4.7, "total_mean": 23.7, "total_sd": 1.3},
    ('bma', 4, 24, 7): {"sel": [3.2, 21.2, 20.7, 15.9], "alloc": [4.6, 5.7, 5.8, 5.6], "early": 39.0, "total_mean": 21.6, "total_sd": 3.4},
    ('bma', 4, 24, 8): {"sel": [77.8, 17.3, 3.6, 0.9], "alloc": [10.2, 5.4, 4.3, 4.1], "early": 0.4, "total_mean": 24.0, "total_sd": 0.7},
    ('bma', 4, 30, 1): {"sel": [37.7, 48.2, 12.1, 1.5], "alloc": [9.7, 8.8, 6.1, 5.3], "early": 0.5, "total_mean": 30.0, "total_sd": 0.6},
    ('bma', 4, 30, 2): {"sel": [0.0, 1.4, 15.3, 40.2], "alloc": [5.0, 5.2, 6.6, 9.5], "early": 43.1, "total_mean": 26.3, "total_sd": 4.7},
    ('bma', 4, 30, 3): {"sel": [0.0, 0.0, 0.6, 8.2], "alloc": [5.0, 5.0, 5.1, 6.3], "early": 91.2, "total_mean": 21.4, "total_sd": 3.3},
    ('bma', 4, 30, 4): {"sel": [3.2, 28.7, 40.9, 22.1], "alloc": [5.7, 7.8, 8.2, 7.8], "early": 5.1, "total_mean": 29.5, "total_sd": 2.2},
    ('bma', 4, 30, 5): {"sel": [3.0, 23.4, 34.1, 24.8], "alloc": [5.7, 7.5, 8.0, 7.6], "early": 14.7, "total_mean": 28.8, "total_sd": 3.2},
    ('bma', 4, 30, 6): {"sel": [25.5, 43.3, 14.6, 10.2], "alloc": [8.4, 8.6, 6.6, 6.0], "early": 6.4, "total_mean": 29.6, "total_sd": 1.9},
    ('bma', 4, 30, 7): {"sel": [2.2, 17.9, 17.9, 19.0], "alloc": [5.6, 7.1, 6.9, 7.0], "early": 43.0, "total_mean": 26.6, "total_sd": 4.4},
    ('bma', 4, 30, 8): {"sel": [80.1, 16.7, 2.7, 0.4], "alloc": [12.8, 6.7, 5.4, 5.1], "early": 0.1, "total_mean": 30.0, "total_sd": 0.1},
    ('bma', 4, 40, 1): {"sel": [40.1, 50.2, 8.2, 0.7], "alloc": [11.7, 11.5, 8.6, 8.0], "early": 0.8, "total_mean": 39.9, "total_sd": 1.7},
    ('bma', 4, 40, 2): {"sel": [0.0, 0.2, 14.1, 42.5], "alloc": [8.0, 8.1, 9.0, 11.8], "early": 43.2, "total_mean": 36.8, "total_sd": 4.2},
    ('bma', 4, 40, 3): {"sel": [0.0, 0.0, 0.1, 5.1], "alloc": [8.0, 8.0, 8.0, 8.6], "early": 94.8, "total_mean": 32.5, "total_sd": 2.5},
    ('bma', 4, 40, 4): {"sel": [2.2, 24.9, 46.9, 22.9], "alloc": [8.4, 10.4, 10.8, 10.2], "early": 3.1, "total_mean": 39.7, "total_sd": 2.2},
    ('bma', 4, 40, 5): {"sel": [1.9, 21.8, 40.8, 23.2], "alloc": [8.3, 9.9, 10.9, 9.9], "early": 12.3, "total_mean": 39.1, "total_sd": 3.0},
    ('bma', 4, 40, 6): {"sel": [25.6, 42.7, 18.9, 8.5], "alloc": [10.5, 11.3, 9.2, 8.6], "early": 4.3, "total_mean": 39.6, "total_sd": 2.1},
    ('bma', 4, 40, 7): {"sel": [1.4, 13.9, 20.8, 15.9], "alloc": [8.3, 9.3, 9.6, 9.5], "early": 48.0, "total_mean": 36.7, "total_sd": 4.1},
    ('bma', 4, 40, 8): {"sel": [83.1, 16.0, 0.5, 0.1], "alloc": [14.6, 9.4, 8.0, 7.9], "early": 0.3, "total_mean": 39.9, "total_sd": 1.1},
    ('bma', 5, 30, 1): {"sel": [43.7, 49.8, 6.2, 0.2, 0.1], "alloc": [9.5, 7.9, 4.6, 4.0, 4.0], "early": 0.0, "total_mean": 30.0, "total_sd": 0.0},
    ('bma', 5, 30, 2): {"sel": [0.1, 2.3, 23.4, 33.0, 29.6], "alloc": [4.0, 4.5, 6.0, 6.8, 7.5], "early": 11.6, "total_mean": 28.9, "total_sd": 3.3},
    ('bma', 5, 30, 3): {"sel": [0.0, 0.0, 0.1, 1.6, 8.4], "alloc": [4.0, 4.0, 4.0, 4.3, 5.4], "early": 89.9, "total_mean": 21.6, "total_sd": 3.6},
    ('bma', 5, 30, 4): {"sel": [3.5, 34.6, 42.1, 15.6, 3.6], "alloc": [4.9, 8.0, 7.2, 5.1, 4.7], "early": 0.6, "total_mean": 30.0, "total_sd": 0.8},
    ('bma', 5, 30, 5): {"sel": [0.0, 1.5, 17.7, 27.5, 26.6], "alloc": [4.0, 4.3, 5.8, 6.7, 7.0], "early": 26.7, "total_mean": 27.8, "total_sd": 4.1},
    ('bma', 5, 30, 6): {"sel": [24.8, 38.2, 19.6, 7.4, 7.3], "alloc": [7.2, 7.4, 5.9, 4.6, 4.7], "early": 2.7, "total_mean": 29.8, "total_sd": 1.4},
    ('bma', 5, 30, 7): {"sel": [1.7, 12.8, 18.0, 15.6, 11.4], "alloc": [4.5, 5.6, 6.0, 5.3, 5.5], "early": 40.5, "total_mean": 27.0, "total_sd": 4.2},
    ('bma', 5, 30, 8): {"sel": [78.4, 18.6, 2.2, 0.2, 0.3], "alloc": [11.5, 6.0, 4.4, 4.0, 4.0], "early": 0.3, "total_mean": 30.0, "total_sd": 0.9},
    ('bma', 5, 40, 1): {"sel": [45.4, 51.0, 2.8, 0.1, 0.0], "alloc": [11.4, 10.3, 6.0, 6.0, 5.9], "early": 0.7, "total_mean": 39.9, "total_sd": 1.7},
    ('bma', 5, 40, 2): {"sel": [0.0, 1.0, 15.4, 41.8, 31.6], "alloc": [6.0, 6.2, 7.7, 9.2, 9.9], "early": 10.2, "total_mean": 38.9, "total_sd": 3.6},
    ('bma', 5, 40, 3): {"sel": [0.0, 0.0, 0.0, 0.7, 5.5], "alloc": [6.0, 6.0, 6.0, 6.1, 6.8], "early": 93.8, "total_mean": 30.9, "total_sd": 3.3},
    ('bma', 5, 40, 4): {"sel": [2.6, 38.7, 44.8, 11.4, 1.6], "alloc": [6.5, 10.2, 9.7, 7.1, 6.3], "early": 0.9, "total_mean": 39.8, "total_sd": 2.2},
    ('bma', 5, 40, 5): {"sel": [0.0, 0.4, 12.8, 32.4, 30.6], "alloc": [6.0, 6.1, 7.4, 9.0, 9.3], "early": 23.8, "total_mean": 37.9, "total_sd": 4.4},
    ('bma', 5, 40, 6): {"sel": [24.9, 34.6, 23.4, 8.6, 5.7], "alloc": [9.2, 9.1, 8.1, 6.8, 6.5], "early": 2.8, "total_mean": 39.7, "total_sd": 2.1},
    ('bma', 5, 40, 7): {"sel": [1.5, 11.2, 14.7, 15.2, 11.3], "alloc": [6.4, 7.3, 7.3, 7.3, 7.2], "early": 46.1, "total_mean": 36.1, "total_sd": 4.9},
    ('bma', 5, 40, 8): {"sel": [80.3, 16.7, 2.2, 0.5, 0.2], "alloc": [14.1, 7.7, 6.3, 6.0, 5.9], "early": 0.1, "total_mean": 40.0, "total_sd": 0.8},
    ('selection', 3, 18, 1): {"sel": [81.2, 16.6, 1.4], "alloc": [8.9, 4.9, 4.2], "early": 0.8, "total_mean": 18.0, "total_sd": 0.7},
    ('selection', 3, 18, 2): {"sel": [6.8, 31.2, 35.4], "alloc": [4.8, 5.8, 6.2], "early": 26.6, "total_mean": 16.9, "total_sd": 2.2},
    ('selection', 3, 18, 3): {"sel": [0.0, 4.8, 27.9], "alloc": [4.1, 4.5, 6.4], "early": 67.3, "total_mean": 15.0, "total_sd": 2.7},
    ('selection', 3, 18, 4): {"sel": [38.9, 43.3, 13.7], "alloc": [6.9, 6.0, 5.0], "early": 4.1, "total_mean": 17.8, "total_sd": 1.0},
    ('selection', 3, 18, 5): {"sel": [33.0, 42.0, 12.8], "alloc": [6.5, 6.0, 4.9], "early": 12.2, "total_mean": 17.5, "total_sd": 1.6},
    ('selection', 3, 18, 6): {"sel": [62.8, 22.2, 7.3], "alloc": [8.0, 5.1, 4.5], "early": 7.7, "total_mean": 17.6, "total_sd": 1.4},
    ('selection', 3, 18, 7): {"sel": [28.7, 21.7, 12.5], "alloc": [6.1, 5.2, 4.9], "early": 37.1, "total_mean": 16.3, "total_sd": 2.6},
    ('selection', 3, 18, 8): {"sel": [92.4, 5.9, 1.1], "alloc": [9.5, 4.4, 4.1], "early": 0.6, "total_mean": 18.0, "total_sd": 0.6},
    ('selection', 3, 24, 1): {"sel": [85.2, 13.8, 0.4], "alloc": [11.2, 6.8, 6.0], "early": 0.6, "total_mean": 23.9, "total_sd": 1.1},
    ('selection', 3, 24, 2): {"sel": [5.2, 27.6, 41.4], "alloc": [6.5, 7.7, 8.5], "early": 25.8, "total_mean": 22.8, "total_sd": 2.5},
    ('selection', 3, 24, 3): {"sel": [0.0, 2.8, 23.3], "alloc": [6.0, 6.2, 7.8], "early": 73.9, "total_mean": 20.1, "total_sd": 2.8},
    ('selection', 3, 24, 4): {"sel": [36.2, 44.6, 15.0], "alloc": [8.6, 8.3, 6.9], "early": 4.2, "total_mean": 29.8, "total_sd": 1.6},
    ('selection', 3, 24, 5): {"sel": [31.2, 40.8, 15.3], "alloc": [8.4, 8.1, 7.0], "early": 12.7, "total_mean": 23.4, "total_sd": 1.9},
    ('selection', 3, 24, 6): {"sel": [63.0, 22.0, 7.9], "alloc": [9.9, 7.3, 6.5], "early": 7.1, "total_mean": 23.6, "total_sd": 1.7},
    ('selection', 3, 24, 7): {"sel": [26.4, 16.4, 14.5], "alloc": [8.0, 7.1, 6.9], "early": 42.7, "total_mean": 22.0, "total_sd": 2.8},
    ('selection', 3, 24, 8): {"sel": [94.7, 4.4, 0.2], "alloc": [11.6, 6.3, 6.0], "early": 0.7, "total_mean": 23.9, "total_sd": 1.2},
    ('selection', 3, 30, 1): {"sel": [86.2, 12.7, 0.3], "alloc": [13.1, 8.8, 7.9], "early": 0.8, "total_mean": 29.9, "total_sd": 1.4},
    ('selection', 3, 30, 2): {"sel": [3.5, 23.6, 45.6], "alloc": [8.4, 9.5, 10.7], "early": 27.3, "total_mean": 28.6, "total_sd": 2.8},
    ('selection', 3, 30, 3): {"sel": [0.0, 1.3, 20.5], "alloc": [8.0, 8.1, 9.6], "early": 78.2, "total_mean": 25.7, "total_sd": 2.9},
    ('selection', 3, 30, 4): {"sel": [35.1, 47.5, 14.9], "alloc": [10.3, 10.7, 8.8], "early": 2.5, "total_mean": 29.8, "total_sd": 1.6},
    ('selection', 3, 30, 5): {"sel": [32.1, 42.1, 15.1], "alloc": [10.2, 10.4, 8.9], "early": 10.7, "total_mean": 29.5, "total_sd": 2.1},
    ('selection', 3, 30, 6): {"sel": [63.9, 22.9, 6.3], "alloc": [11.9, 9.4, 8.3], "early": 6.9, "total_mean": 29.6, "total_sd": 1.9},
    ('selection', 3, 30, 7): {"sel": [24.2, 16.2, 13.1], "alloc": [9.8, 9.1, 8.9], "early": 46.5, "total_mean": 27.8, "total_sd": 3.0},
    ('selection', 3, 30, 8): {"sel": [95.6, 3.5, 0.3], "alloc": [13.7, 8.3, 7.9], "early": 0.6, "total_mean": 29.9, "total_sd": 1.4},
    ('selection', 3, 40, 1): {"sel": [88.5, 10.3, 0.2], "alloc": [18.9, 11.0, 9.9], "early": 1.0, "total_mean": 39.8, "total_sd": 2.4},
    ('selection', 3, 40, 2): {"sel": [2.3, 20.0, 46.7], "alloc": [10.4, 12.3, 14.6], "early": 31.0, "total_mean": 37.4, "total_sd": 4.7},
    ('selection', 3, 40, 3): {"sel": [0.0, 0.3, 13.4], "alloc": [10.0, 10.0, 11.9], "early": 86.3, "total_mean": 31.9, "total_sd": 4.2},
    ('selection', 3, 40, 4): {"sel": [29.1, 55.5, 11.7], "alloc": [13.5, 15.0, 11.1], "early": 3.7, "total_mean": 39.6, "total_sd": 2.9},
    ('selection', 3, 40, 5): {"sel": [24.9, 48.0, 13.0], "alloc": [13.1, 14.5, 11.3], "early": 14.1, "total_mean": 38.8, "total_sd": 6.3},
    ('selection', 3, 40, 6): {"sel": [64.5, 23.9, 3.9], "alloc": [16.7, 12.2, 10.3], "early": 7.7, "total_mean": 39.2, "total_sd": 3.3},
    ('selection', 3, 40, 7): {"sel": [16.0, 14.0, 9.6], "alloc": [12.2, 11.6, 11.0], "early": 60.4, "total_mean": 34.8, "total_sd": 5.1},
    ('selection', 3, 40, 8): {"sel": [95.9, 3.1, 0.1], "alloc": [19.5, 10.4, 9.9], "early": 0.9, "total_mean": 39.8, "total_sd": 2.3},
    ('selection', 4, 24, 1): {"sel": [34.3, 48.3, 15.5, 1.6], "alloc": [7.4, 7.3, 5.0, 4.3], "early": 0.3, "total_mean": 24.0, "total_sd": 0.3},
    ('selection', 4, 24, 2): {"sel": [0.2, 2.1, 19.4, 39.9], "alloc": [4.0, 4.4, 5.5, 7.5], "early": 38.4, "total_mean": 21.4, "total_sd": 3.6},
    ('selection', 4, 24, 3): {"sel": [0.0, 0.0, 1.4, 15.1], "alloc": [4.0, 4.0, 4.2, 5.7], "early": 83.5, "total_mean": 18.0, "total_sd": 3.2},
    ('selection', 4, 24, 4): {"sel": [4.2, 26.6, 42.3, 19.7], "alloc": [4.7, 6.5, 6.3, 6.1], "early": 7.2, "total_mean": 23.6, "total_sd": 1.7},
    ('selection', 4, 24, 5): {"sel": [4.0, 22.6, 35.1, 19.1], "alloc": [4.8, 6.0, 6.4, 5.8], "early": 19.2, "total_mean": 22.9, "total_sd": 2.6},
    ('selection', 4, 24, 6): {"sel": [29.2, 32.2, 18.5, 9.3], "alloc": [6.9, 6.5, 5.3, 4.8], "early": 10.8, "total_mean": 23.4, "total_sd": 1.8},
    ('selection', 4, 24, 7): {"sel": [3.4, 16.2, 15.8, 13.9], "alloc": [4.8, 5.4, 5.3, 5.5], "early": 50.7, "total_mean": 21.0, "total_sd": 3.6},
    ('selection', 4, 24, 8): {"sel": [76.5, 18.0, 4.3, 0.6], "alloc": [9.8, 5.7, 4.3, 4.1], "early": 0.6, "total_mean": 24.0, "total_sd": 0.6},
    ('selection', 4, 30, 1): {"sel": [31.4, 52.5, 14.2, 1.1], "alloc": [9.0, 9.4, 6.3, 5.2], "early": 0.8, "total_mean": 30.0, "total_sd": 0.7},
    ('selection', 4, 30, 2): {"sel": [0.0, 1.5, 15.1, 44.8], "alloc": [5.0, 5.3, 6.8, 9.9], "early": 38.6, "total_mean": 26.9, "total_sd": 4.4},
    ('selection', 4, 30, 3): {"sel": [0.0, 0.0, 0.9, 12.7], "alloc": [5.0, 5.0, 5.1, 7.0], "early": 86.4, "total_mean": 22.1, "total_sd": 3.8},
    ('selection', 4, 30, 4): {"sel": [3.1, 25.0, 45.4, 19.7], "alloc": [5.7, 7.8, 8.8, 7.3], "early": 6.8, "total_mean": 29.5, "total_sd": 2.3},
    ('selection', 4, 30, 5): {"sel": [4.3, 19.4, 36.5, 21.0], "alloc": [5.7, 7.3, 8.3, 7.2], "early": 18.8, "total_mean": 28.6, "total_sd": 3.3},
    ('selection', 4, 30, 6): {"sel": [27.5, 37.5, 15.9, 8.7], "alloc": [8.5, 8.3, 6.7, 5.8], "early": 10.4, "total_mean": 29.3, "total_sd": 2.3},
    ('selection', 4, 30, 7): {"sel": [3.3, 13.9, 15.4, 15.2], "alloc": [5.8, 6.7, 6.7, 6.9], "early": 52.2, "total_mean": 26.1, "total_sd": 4.5},
    ('selection', 4, 30, 8): {"sel": [78.4, 17.9, 3.1, 0.3], "alloc": [12.6, 6.9, 5.4, 5.1], "early": 0.3, "total_mean": 30.0, "total_sd": 0.4},
    ('selection', 4, 40, 1): {"sel": [30.7, 58.8, 9.1, 0.4], "alloc": [11.0, 12.2, 8.8, 8.0], "early": 1.0, "total_mean": 39.9, "total_sd": 1.6},
    ('selection', 4, 40, 2): {"sel": [0.0, 0.3, 15.2, 46.8], "alloc": [8.0, 8.1, 9.1, 12.2], "early": 37.7, "total_mean": 37.4, "total_sd": 4.0},
    ('selection', 4, 40, 3): {"sel": [0.0, 0.0, 0.2, 6.5], "alloc": [8.0, 8.0, 8.0, 8.8], "early": 93.3, "total_mean": 32.8, "total_sd": 2.8},
    ('selection', 4, 40, 4): {"sel": [1.6, 23.8, 52.0, 18.8], "alloc": [8.3, 10.0, 11.5, 9.8], "early": 3.8, "total_mean": 39.7, "total_sd": 2.2},
    ('selection', 4, 40, 5): {"sel": [2.0, 20.1, 42.3, 19.1], "alloc": [8.3, 9.6, 11.2, 9.7], "early": 16.5, "total_mean": 38.8, "total_sd": 3.1},
    ('selection', 4, 40, 6): {"sel": [28.1, 35.6, 19.4, 7.0], "alloc": [10.7, 10.7, 9.4, 8.5], "early": 9.9, "total_mean": 39.3, "total_sd": 2.4},
    ('selection', 4, 40, 7): {"sel": [2.2, 14.0, 15.0, 12.7], "alloc": [8.4, 9.2, 9.2, 9.3], "early": 56.1, "total_mean": 36.2, "total_sd": 4.1},
    ('selection', 4, 40, 8): {"sel": [80.9, 18.0, 0.9, 0.0], "alloc": [14.4, 9.7, 8.0, 7.9], "early": 0.2, "total_mean": 40.0, "total_sd": 0.8},
    ('selection', 5, 30, 1): {"sel": [38.6, 53.1, 7.8, 0.4, 0.0], "alloc": [8.6, 8.5, 5.0, 4.0, 4.0], "early": 0.1, "total_mean": 30.0, "total_sd": 0.1},
    ('selection', 5, 30, 2): {"sel": [0.0, 2.0, 20.8, 40.0, 25.3], "alloc": [4.0, 4.3, 6.1, 7.3, 7.3], "early": 11.9, "total_mean": 28.9, "total_sd": 3.2},
    ('selection', 5, 30, 3): {"sel": [0.0, 0.0, 0.1, 1.5, 11.6], "alloc": [4.0, 4.0, 4.0, 4.3, 5.7], "early": 86.8, "total_mean": 22.0, "total_sd": 3.9},
    ('selection', 5, 30, 4): {"sel": [1.8, 34.4, 42.9, 18.1, 1.9], "alloc": [4.7, 7.3, 8.1, 5.3, 4.5], "early": 0.9, "total_mean": 29.9, "total_sd": 1.2},
    ('selection', 5, 30, 5): {"sel": [0.1, 0.7, 16.5, 27.5, 26.0], "alloc": [4.0, 4.2, 5.8, 6.8, 6.9], "early": 29.2, "total_mean": 27.7, "total_sd": 4.2},
    ('selection', 5, 30, 6): {"sel": [26.8, 29.4, 20.3, 8.3, 6.3], "alloc": [7.4, 6.4, 6.2, 4.8, 4.5], "early": 8.9, "total_mean": 29.4, "total_sd": 2.3},
    ('selection', 5, 30, 7): {"sel": [3.6, 9.8, 13.5, 9.5, 10.5], "alloc": [4.8, 4.9, 5.7, 5.1, 5.2], "early": 53.1, "total_mean": 25.9, "total_sd": 4.6},
    ('selection', 5, 30, 8): {"sel": [75.4, 20.3, 3.4, 0.5, 0.2], "alloc": [11.1, 6.2, 4.6, 4.1, 4.0], "early": 0.2, "total_mean": 30.0, "total_sd": 0.6},
    ('selection', 5, 40, 1): {"sel": [38.2, 57.1, 3.9, 0.1, 0.0], "alloc": [10.6, 10.9, 6.5, 6.0, 5.9], "early": 0.7, "total_mean": 39.9, "total_sd": 1.7},
    ('selection', 5, 40, 2): {"sel": [0.0, 0.5, 14.0, 45.4, 30.0], "alloc": [6.0, 6.1, 7.6, 9.7, 9.5], "early": 10.1, "total_mean": 39.0, "total_sd": 3.5},
    ('selection', 5, 40, 3): {"sel": [0.0, 0.0, 0.0, 0.4, 8.7], "alloc": [6.0, 6.0, 6.0, 6.1, 7.3], "early": 90.9, "total_mean": 31.4, "total_sd": 3.7},
    ('selection', 5, 40, 4): {"sel": [2.0, 35.2, 48.4, 12.1, 1.1], "alloc": [6.3, 9.7, 10.4, 7.2, 6.2], "early": 1.2, "total_mean": 39.8, "total_sd": 2.1},
    ('selection', 5, 40, 5): {"sel": [0.0, 0.9, 12.3, 32.5, 28.0], "alloc": [6.0, 6.1, 7.4, 9.2, 9.1], "early": 26.3, "total_mean": 37.8, "total_sd": 4.4},
    ('selection', 5, 40, 6): {"sel": [26.7, 28.9, 22.9, 8.9, 4.2], "alloc": [9.4, 8.5, 8.3, 6.8, 6.3], "early": 8.4, "total_mean": 39.4, "total_sd": 2.6},
    ('selection', 5, 40, 7): {"sel": [2.6, 7.5, 11.8, 8.0, 10.0], "alloc": [6.7, 6.8, 7.5, 6.8, 7.1], "early": 60.1, "total_mean": 35.0, "total_sd": 4.9},
    ('selection', 5, 40, 8): {"sel": [76.5, 20.3, 2.7, 0.4, 0.1], "alloc": [13.5, 8.2, 6.3, 6.0, 5.9], "early": 0.0, "total_mean": 40.0, "total_sd": 0.0},
}
