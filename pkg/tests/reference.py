"""Values as printed in the reference tables, frozen for golden comparisons."""

YEARS = list(range(2008, 2018))
OUTPUT = [527, 600, 606, 678, 763, 834, 950, 1216, 1475, 2085]
CUMULATIVE_PCT = [5.41, 11.58, 17.80, 24.77, 32.61, 41.18, 50.93, 63.43, 78.58, 100.0]
GROWTH_RATE = [None, 0.878, 0.990, 0.894, 0.889, 0.915, 0.878, 0.781, 0.824, 0.707]
MEAN_GROWTH_RATE = 0.862

BUCKETS = [
    [110, 158, 124, 64, 40, 18, 5, 3, 2, 1],
    [113, 162, 148, 105, 32, 15, 13, 7, 2, 2],
    [105, 156, 157, 87, 44, 23, 12, 9, 4, 3],
    [116, 163, 178, 123, 53, 19, 8, 6, 2, 3],
    [113, 173, 207, 150, 59, 23, 14, 9, 4, 3],
    [100, 180, 218, 177, 81, 33, 19, 12, 5, 3],
    [127, 194, 227, 206, 97, 44, 23, 11, 8, 3],
    [199, 259, 316, 208, 126, 50, 24, 7, 11, 1],
    [225, 330, 370, 238, 129, 76, 37, 24, 14, 11],
    [443, 434, 421, 315, 200, 100, 63, 29, 27, 13],
]
BUCKETED_PAPERS = [525, 599, 600, 671, 755, 828, 940, 1201, 1454, 2045]
TOTAL_AUTHORS = [1481, 1748, 1896, 2102, 2460, 2811, 3287, 4012, 5033, 6973]
AAPP = 3.31

CI = [2.82, 2.92, 3.16, 3.13, 3.26, 3.39, 3.50, 3.34, 3.46, 3.41]
DC = [0.79, 0.81, 0.83, 0.83, 0.85, 0.88, 0.86, 0.83, 0.85, 0.78]
CAI = [95.43, 97.95, 99.60, 99.85, 102.65, 106.14, 104.41, 100.72, 102.04, 94.57]
CC = [0.3766, 0.4206, 0.4479, 0.4526, 0.493, 0.5416, 0.528, 0.476, 0.4937, 0.4053]
MCC = [0.3775, 0.4215, 0.4488, 0.4534, 0.4938, 0.5423, 0.5287, 0.4765, 0.4941, 0.4056]
MCC_MINUS_CC = [0.0009, 0.0009, 0.0009, 0.0008, 0.0008, 0.0007, 0.0007, 0.0005, 0.0004, 0.0003]
COLLAB_MEANS = {"ci": 3.24, "dc": 0.83, "cai": 100.34, "cc": 0.4635, "mcc": 0.4642}

PRODUCTIVITY = [18995, 2826, 860, 344, 167, 83, 46, 48, 26, 65]
N_AUTHORS = 23460
SUMS = {"sum_x": 6.5598, "sum_y": 23.9145, "sum_xy": 13.0998, "sum_x2": 5.2152}
EXPONENT = 2.84
CONSTANT_FITTED = 0.8083
CONSTANT_SQUARE = 0.6079

OBSERVED = [0.8097, 0.1205, 0.0367, 0.0147, 0.0071, 0.0035, 0.0020, 0.0020, 0.0011, 0.0028]
EXPECTED_FITTED = [0.8083, 0.1131, 0.0358, 0.0158, 0.0084, 0.0050, 0.0032, 0.0022, 0.0016, 0.0012]
EXPECTED_CUM_FITTED = [0.8083, 0.9214, 0.9572, 0.9731, 0.9815, 0.9865, 0.9897, 0.9919, 0.9935, 0.9947]
EXPECTED_SQUARE = [0.6079, 0.1520, 0.0675, 0.0380, 0.0243, 0.0169, 0.0124, 0.0095, 0.0075, 0.0061]
EXPECTED_CUM_SQUARE = [0.6079, 0.7599, 0.8274, 0.8654, 0.8897, 0.9066, 0.9190, 0.9285, 0.9360, 0.9421]
DMAX_FITTED, DMAX_FITTED_AT = 0.0073, 2
DMAX_SQUARE, DMAX_SQUARE_AT = 0.2018, 1
CRITICAL = 0.0185

# relative growth rate column; 2008 and 2011 are known misprints
RGR = [-0.0002, 0.6301, 1.0511, -0.4936, 1.4257, 1.5698, 1.6525, 1.6247, 1.6456, 1.5405]
RGR_EXEMPT = {2008, 2011}
DT_PRINTED = {2013: 0.4415, 2017: 0.4499}
PERIOD_MEAN_RGR = {(2008, 2012): 0.52262, (2013, 2017): 1.60662}
PERIOD_MEAN_DT = {(2008, 2012): 0.912275, (2013, 2017): 0.43168}
GRAND_MEAN_DT = 0.6719775
