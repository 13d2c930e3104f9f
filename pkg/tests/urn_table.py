# Published values of chi_n(k): rows n = 0..9, columns k = 0..7.
URN_TABLE = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 2, 4, 8, 16, 32, 64, 128],
    [0, 2, 10, 44, 186, 772, 3172, 12952],
    [0, 0, 12, 144, 1428, 13080, 115104, 989184],
    [0, 0, 0, 216, 6144, 139800, 2821464, 53500944],
    [0, 0, 0, 0, 11520, 780000, 41472000, 1870310400],
    [0, 0, 0, 0, 0, 1800000, 293544000, 37139820480],
    [0, 0, 0, 0, 0, 0, 816480000, 325275955200],
    [0, 0, 0, 0, 0, 0, 0, 1067311728000],
    [0, 0, 0, 0, 0, 0, 0, 0],
]
