//! Multiplicity tables transcribed for comparison.

/// (partition, d, sym rows, sym cols, symm, exp rows, exp cols, rank, null, new)
pub const TETRAD7: [(&str, [usize; 9]); 15] = [
    ("7", [1, 3, 2, 0, 2, 1, 1, 1, 1]),
    ("6,1", [6, 18, 12, 4, 12, 6, 3, 9, 5]),
    ("5,2", [14, 42, 28, 12, 28, 14, 8, 20, 8]),
    ("5,1,1", [15, 45, 30, 16, 30, 15, 6, 24, 8]),
    ("4,3", [14, 42, 28, 12, 28, 14, 7, 21, 9]),
    ("4,2,1", [35, 105, 70, 36, 70, 35, 18, 52, 16]),
    ("4,1,1,1", [20, 60, 40, 24, 40, 20, 10, 30, 6]),
    ("3,3,1", [21, 63, 42, 20, 42, 21, 9, 33, 13]),
    ("3,2,2", [21, 63, 42, 20, 42, 21, 12, 30, 10]),
    ("3,2,1,1", [35, 105, 70, 36, 70, 35, 17, 53, 17]),
    ("3,1,1,1,1", [15, 45, 30, 16, 30, 15, 9, 21, 5]),
    ("2,2,2,1", [14, 42, 28, 12, 28, 14, 7, 21, 9]),
    ("2,2,1,1,1", [14, 42, 28, 12, 28, 14, 6, 22, 10]),
    ("2,1,1,1,1,1", [6, 18, 12, 4, 12, 6, 3, 9, 5]),
    ("1,1,1,1,1,1,1", [1, 3, 2, 0, 2, 1, 0, 2, 2]),
];

/// (partition, d, sym rows, sym cols, symm, exp rows, exp cols, rank, null, new)
pub const ANTITETRAD7: [(&str, [usize; 9]); 15] = [
    ("7", [1, 3, 2, 2, 2, 1, 0, 2, 0]),
    ("6,1", [6, 18, 12, 8, 12, 6, 3, 9, 1]),
    ("5,2", [14, 42, 28, 16, 28, 14, 8, 20, 4]),
    ("5,1,1", [15, 45, 30, 14, 30, 15, 6, 24, 10]),
    ("4,3", [14, 42, 28, 16, 28, 14, 7, 21, 5]),
    ("4,2,1", [35, 105, 70, 34, 70, 35, 18, 52, 18]),
    ("4,1,1,1", [20, 60, 40, 16, 40, 20, 10, 30, 14]),
    ("3,3,1", [21, 63, 42, 22, 42, 21, 9, 33, 11]),
    ("3,2,2", [21, 63, 42, 22, 42, 21, 12, 30, 8]),
    ("3,2,1,1", [35, 105, 70, 34, 70, 35, 17, 53, 19]),
    ("3,1,1,1,1", [15, 45, 30, 14, 30, 15, 9, 21, 7]),
    ("2,2,2,1", [14, 42, 28, 16, 28, 14, 7, 21, 5]),
    ("2,2,1,1,1", [14, 42, 28, 16, 28, 14, 6, 22, 6]),
    ("2,1,1,1,1,1", [6, 18, 12, 8, 12, 6, 3, 9, 1]),
    ("1,1,1,1,1,1,1", [1, 3, 2, 2, 2, 1, 0, 2, 0]),
];

/// (row, partition, d, sym rows, sym cols, symm, symmlift, exp rows, exp cols, rank, null, new)
pub const TETRAD10: [(usize, &str, [usize; 10]); 42] = [
    (1, "10", [1, 9, 8, 0, 7, 8, 1, 1, 7, 0]),
    (2, "9,1", [9, 81, 72, 30, 68, 72, 9, 4, 68, 0]),
    (3, "8,2", [35, 315, 280, 140, 260, 280, 35, 20, 260, 0]),
    (4, "8,1,1", [36, 324, 288, 166, 272, 288, 36, 16, 272, 0]),
    (5, "7,3", [75, 675, 600, 342, 565, 600, 75, 35, 565, 0]),
    (6, "7,2,1", [160, 1440, 1280, 784, 1200, 1280, 160, 80, 1200, 0]),
    (7, "7,1,1,1", [84, 756, 672, 442, 628, 672, 84, 44, 628, 0]),
    (8, "6,4", [90, 810, 720, 416, 670, 720, 90, 50, 670, 0]),
    (9, "6,3,1", [315, 2835, 2520, 1594, 2365, 2520, 315, 155, 2365, 0]),
    (10, "6,2,2", [225, 2025, 1800, 1150, 1680, 1800, 225, 120, 1680, 0]),
    (11, "6,2,1,1", [350, 3150, 2800, 1878, 2630, 2800, 350, 170, 2630, 0]),
    (12, "6,1,1,1,1", [126, 1134, 1008, 704, 941, 1008, 126, 66, 942, 1]),
    (13, "5,5", [42, 378, 336, 204, 320, 336, 42, 16, 320, 0]),
    (14, "5,4,1", [288, 2592, 2304, 1456, 2160, 2304, 288, 144, 2160, 0]),
    (15, "5,3,2", [450, 4050, 3600, 2330, 3380, 3600, 450, 220, 3380, 0]),
    (16, "5,3,1,1", [567, 5103, 4536, 3008, 4244, 4536, 567, 291, 4245, 1]),
    (17, "5,2,2,1", [525, 4725, 4200, 2808, 3939, 4200, 525, 260, 3940, 1]),
    (18, "5,2,1,1,1", [448, 4032, 3584, 2464, 3357, 3584, 448, 224, 3360, 3]),
    (19, "5,1,1,1,1,1", [126, 1134, 1008, 708, 945, 1008, 126, 60, 948, 3]),
    (20, "4,4,2", [252, 2268, 2016, 1282, 1880, 2016, 252, 136, 1880, 0]),
    (21, "4,4,1,1", [300, 2700, 2400, 1582, 2260, 2400, 300, 140, 2260, 0]),
    (22, "4,3,3", [210, 1890, 1680, 1092, 1580, 1680, 210, 100, 1580, 0]),
    (23, "4,3,2,1", [768, 6912, 6144, 4032, 5760, 6144, 768, 384, 5760, 0]),
    (24, "4,3,1,1,1", [525, 4725, 4200, 2802, 3933, 4200, 525, 265, 3935, 2]),
    (25, "4,2,2,2", [300, 2700, 2400, 1562, 2239, 2400, 300, 160, 2240, 1]),
    (26, "4,2,2,1,1", [567, 5103, 4536, 3022, 4260, 4536, 567, 276, 4260, 0]),
    (27, "4,2,1,1,1,1", [350, 3150, 2800, 1870, 2616, 2800, 350, 180, 2620, 4]),
    (28, "4,1,1,1,1,1,1", [84, 756, 672, 446, 631, 672, 84, 40, 632, 1]),
    (29, "3,3,3,1", [210, 1890, 1680, 1080, 1569, 1680, 210, 110, 1570, 1]),
    (30, "3,3,2,2", [252, 2268, 2016, 1302, 1900, 2016, 252, 116, 1900, 0]),
    (31, "3,3,2,1,1", [450, 4050, 3600, 2322, 3368, 3600, 450, 230, 3370, 2]),
    (32, "3,3,1,1,1,1", [225, 2025, 1800, 1164, 1693, 1800, 225, 105, 1695, 2]),
    (33, "3,2,2,2,1", [288, 2592, 2304, 1456, 2159, 2304, 288, 144, 2160, 1]),
    (34, "3,2,2,1,1,1", [315, 2835, 2520, 1588, 2358, 2520, 315, 160, 2360, 2]),
    (35, "3,2,1,1,1,1,1", [160, 1440, 1280, 784, 1198, 1280, 160, 80, 1200, 2]),
    (36, "3,1,1,1,1,1,1,1", [36, 324, 288, 162, 268, 288, 36, 20, 268, 0]),
    (37, "2,2,2,2,2", [42, 378, 336, 192, 309, 336, 42, 26, 310, 1]),
    (38, "2,2,2,2,1,1", [90, 810, 720, 428, 680, 720, 90, 40, 680, 0]),
    (39, "2,2,2,1,1,1,1", [75, 675, 600, 336, 559, 600, 75, 40, 560, 1]),
    (40, "2,2,1,1,1,1,1,1", [35, 315, 280, 146, 265, 280, 35, 15, 265, 0]),
    (41, "2,1,1,1,1,1,1,1,1", [9, 81, 72, 28, 67, 72, 9, 5, 67, 0]),
    (42, "1,1,1,1,1,1,1,1,1,1", [1, 9, 8, 2, 8, 8, 1, 0, 8, 0]),
];

/// (row, partition, d, sym rows, sym cols, symm, symmlift, exp rows, exp cols, rank, null, new)
pub const ANTITETRAD10: [(usize, &str, [usize; 10]); 42] = [
    (1, "10", [1, 9, 8, 8, 8, 8, 1, 0, 8, 0]),
    (2, "9,1", [9, 81, 72, 64, 68, 72, 9, 4, 68, 0]),
    (3, "8,2", [35, 315, 280, 222, 264, 280, 35, 15, 265, 1]),
    (4, "8,1,1", [36, 324, 288, 218, 269, 288, 36, 19, 269, 0]),
    (5, "7,3", [75, 675, 600, 442, 555, 600, 75, 40, 560, 5]),
    (6, "7,2,1", [160, 1440, 1280, 896, 1197, 1280, 160, 80, 1200, 3]),
    (7, "7,1,1,1", [84, 756, 672, 446, 632, 672, 84, 40, 632, 0]),
    (8, "6,4", [90, 810, 720, 524, 677, 720, 90, 40, 680, 3]),
    (9, "6,3,1", [315, 2835, 2520, 1722, 2352, 2520, 315, 160, 2360, 8]),
    (10, "6,2,2", [225, 2025, 1800, 1200, 1693, 1800, 225, 105, 1695, 2]),
    (11, "6,2,1,1", [350, 3150, 2800, 1798, 2619, 2800, 350, 180, 2620, 1]),
    (12, "6,1,1,1,1", [126, 1134, 1008, 612, 948, 1008, 126, 60, 948, 0]),
    (13, "5,5", [42, 378, 336, 236, 309, 336, 42, 26, 310, 1]),
    (14, "5,4,1", [288, 2592, 2304, 1568, 2155, 2304, 288, 144, 2160, 5]),
    (15, "5,3,2", [450, 4050, 3600, 2390, 3365, 3600, 450, 230, 3370, 5]),
    (16, "5,3,1,1", [567, 5103, 4536, 2960, 4258, 4536, 567, 276, 4260, 2]),
    (17, "5,2,2,1", [525, 4725, 4200, 2698, 3935, 4200, 525, 265, 3935, 0]),
    (18, "5,2,1,1,1", [448, 4032, 3584, 2240, 3360, 3584, 448, 224, 3360, 0]),
    (19, "5,1,1,1,1,1", [126, 1134, 1008, 604, 942, 1008, 126, 66, 942, 0]),
    (20, "4,4,2", [252, 2268, 2016, 1358, 1899, 2016, 252, 116, 1900, 1]),
    (21, "4,4,1,1", [300, 2700, 2400, 1562, 2239, 2400, 300, 160, 2240, 1]),
    (22, "4,3,3", [210, 1890, 1680, 1124, 1568, 1680, 210, 110, 1570, 2]),
    (23, "4,3,2,1", [768, 6912, 6144, 4032, 5760, 6144, 768, 384, 5760, 0]),
    (24, "4,3,1,1,1", [525, 4725, 4200, 2702, 3940, 4200, 525, 260, 3940, 0]),
    (25, "4,2,2,2", [300, 2700, 2400, 1582, 2260, 2400, 300, 140, 2260, 0]),
    (26, "4,2,2,1,1", [567, 5103, 4536, 2944, 4245, 4536, 567, 291, 4245, 0]),
    (27, "4,2,1,1,1,1", [350, 3150, 2800, 1810, 2630, 2800, 350, 170, 2630, 0]),
    (28, "4,1,1,1,1,1,1", [84, 756, 672, 442, 627, 672, 84, 44, 628, 1]),
    (29, "3,3,3,1", [210, 1890, 1680, 1132, 1580, 1680, 210, 100, 1580, 0]),
    (30, "3,3,2,2", [252, 2268, 2016, 1338, 1880, 2016, 252, 136, 1880, 0]),
    (31, "3,3,2,1,1", [450, 4050, 3600, 2402, 3380, 3600, 450, 220, 3380, 0]),
    (32, "3,3,1,1,1,1", [225, 2025, 1800, 1184, 1680, 1800, 225, 120, 1680, 0]),
    (33, "3,2,2,2,1", [288, 2592, 2304, 1568, 2160, 2304, 288, 144, 2160, 0]),
    (34, "3,2,2,1,1,1", [315, 2835, 2520, 1726, 2365, 2520, 315, 155, 2365, 0]),
    (35, "3,2,1,1,1,1,1", [160, 1440, 1280, 896, 1200, 1280, 160, 80, 1200, 0]),
    (36, "3,1,1,1,1,1,1,1", [36, 324, 288, 222, 271, 288, 36, 16, 272, 1]),
    (37, "2,2,2,2,2", [42, 378, 336, 244, 320, 336, 42, 16, 320, 0]),
    (38, "2,2,2,2,1,1", [90, 810, 720, 516, 670, 720, 90, 50, 670, 0]),
    (39, "2,2,2,1,1,1,1", [75, 675, 600, 446, 565, 600, 75, 35, 565, 0]),
    (40, "2,2,1,1,1,1,1,1", [35, 315, 280, 218, 260, 280, 35, 20, 260, 0]),
    (41, "2,1,1,1,1,1,1,1,1", [9, 81, 72, 64, 68, 72, 9, 4, 68, 0]),
    (42, "1,1,1,1,1,1,1,1,1,1", [1, 9, 8, 8, 8, 8, 1, 0, 8, 0]),
];

/// Anti-tetrad nonlinear degree-7 table:
/// (multidegree, words, monomials, rank, nullity, new generators).
pub const ANTITETRAD7_NONLINEAR: [(&str, [usize; 5]); 14] = [
    ("a7", [1, 0, 0, 0, 0]),
    ("a6,b", [7, 4, 3, 1, 1]),
    ("a5,b2", [21, 16, 11, 5, 4]),
    ("a5,b,c", [42, 36, 20, 16, 10]),
    ("a4,b3", [35, 28, 18, 10, 5]),
    ("a4,b2,c", [105, 96, 53, 43, 18]),
    ("a4,b,c,d", [210, 204, 104, 100, 14]),
    ("a3,b3,c", [140, 128, 69, 59, 11]),
    ("a3,b2,c2", [210, 196, 107, 89, 8]),
    ("a3,b2,c,d", [420, 408, 209, 199, 19]),
    ("a3,b,c,d,e", [840, 840, 419, 421, 7]),
    ("a2,b2,c2,d", [630, 612, 317, 295, 5]),
    ("a2,b2,c,d,e", [1260, 1248, 629, 619, 6]),
    ("a2,b,c,d,e,f", [2520, 2520, 1259, 1261, 1]),
];
