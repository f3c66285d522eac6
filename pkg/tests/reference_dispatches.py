"""Known-good dispatch reference points for the 10- and 26-unit instances.

Each row is (period, load, assignment string, per-unit power levels, total
cost).  Power levels and costs are rounded to the precision shown; the
regression suite re-dispatches each assignment and compares costs to 0.1%.
"""

REFERENCE_DISPATCHES_10 = (
    (0, 700.0, "1001100000", (455.0, 0.0, 0.0, 130.0, 115.0, 0.0, 0.0, 0.0, 0.0, 0.0), 14094.6),
    (1, 750.0, "1001100100", (455.0, 0.0, 0.0, 130.0, 155.0, 0.0, 0.0, 10.0, 0.0, 0.0), 15845.2),
    (2, 850.0, "1100001000", (455.0, 370.0, 0.0, 0.0, 0.0, 0.0, 25.0, 0.0, 0.0, 0.0), 17038.5),
    (3, 950.0, "1100010000", (455.0, 455.0, 0.0, 0.0, 0.0, 40.0, 0.0, 0.0, 0.0, 0.0), 18625.1),
    (4, 1000.0, "1101000000", (455.0, 415.0, 0.0, 130.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0), 19512.8),
    (5, 1100.0, "1111000000", (455.0, 385.0, 130.0, 130.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0), 21879.3),
    (6, 1150.0, "1111110000", (455.0, 390.0, 130.0, 130.0, 25.0, 20.0, 0.0, 0.0, 0.0, 0.0), 23729.9),
    (7, 1200.0, "1101100000", (455.0, 455.0, 0.0, 130.0, 160.0, 0.0, 0.0, 0.0, 0.0, 0.0), 23917.8),
    (8, 1300.0, "1111100000", (455.0, 455.0, 130.0, 130.0, 130.0, 0.0, 0.0, 0.0, 0.0, 0.0), 26184.0),
    (9, 1400.0, "1111110000", (455.0, 455.0, 130.0, 130.0, 162.0, 68.0, 0.0, 0.0, 0.0, 0.0), 28768.2),
    (10, 1450.0, "1111111000", (455.0, 455.0, 130.0, 130.0, 162.0, 80.0, 38.0, 0.0, 0.0, 0.0), 30583.2),
    (11, 1500.0, "1111111010", (455.0, 455.0, 130.0, 130.0, 162.0, 80.0, 33.0, 0.0, 55.0, 0.0), 32615.8),
    (12, 1400.0, "1111110000", (455.0, 455.0, 130.0, 130.0, 162.0, 68.0, 0.0, 0.0, 0.0, 0.0), 28768.2),
    (13, 1300.0, "1111110000", (455.0, 455.0, 130.0, 130.0, 110.0, 20.0, 0.0, 0.0, 0.0, 0.0), 26589.0),
    (14, 1200.0, "1101100000", (455.0, 455.0, 0.0, 130.0, 160.0, 0.0, 0.0, 0.0, 0.0, 0.0), 23917.8),
    (15, 1050.0, "1100100000", (455.0, 455.0, 0.0, 0.0, 140.0, 0.0, 0.0, 0.0, 0.0, 0.0), 20639.3),
    (16, 1000.0, "1101000010", (455.0, 405.0, 0.0, 130.0, 0.0, 0.0, 0.0, 0.0, 10.0, 0.0), 20275.6),
    (17, 1100.0, "1110010000", (455.0, 455.0, 130.0, 0.0, 0.0, 60.0, 0.0, 0.0, 0.0, 0.0), 21976.3),
    (18, 1200.0, "1111010000", (455.0, 455.0, 130.0, 130.0, 0.0, 30.0, 0.0, 0.0, 0.0, 0.0), 24150.0),
    (19, 1400.0, "1111110000", (455.0, 455.0, 130.0, 130.0, 162.0, 68.0, 0.0, 0.0, 0.0, 0.0), 28768.2),
    (20, 1300.0, "1111100000", (455.0, 455.0, 130.0, 130.0, 130.0, 0.0, 0.0, 0.0, 0.0, 0.0), 26184.0),
    (21, 1100.0, "1110100000", (455.0, 455.0, 130.0, 0.0, 60.0, 0.0, 0.0, 0.0, 0.0, 0.0), 21891.4),
    (22, 900.0, "1101100000", (455.0, 290.0, 0.0, 130.0, 25.0, 0.0, 0.0, 0.0, 0.0, 0.0), 18272.9),
    (23, 800.0, "1100100000", (455.0, 320.0, 0.0, 0.0, 25.0, 0.0, 0.0, 0.0, 0.0, 0.0), 15935.8),
)

REFERENCE_DISPATCHES_26 = (
    (0, 1700.0, "01000000001010101011000111", (0.0, 2.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 30.71, 0.0, 26.89, 0.0, 25.0, 0.0, 155.0, 0.0, 155.0, 155.0, 0.0, 0.0, 0.0, 350.0, 400.0, 400.0), 18880.9),
    (1, 1730.0, "01000001111000001111000111", (0.0, 2.4, 0.0, 0.0, 0.0, 0.0, 0.0, 4.0, 4.0, 15.2, 15.2, 0.0, 0.0, 0.0, 0.0, 0.0, 141.94, 136.7, 132.21, 128.35, 0.0, 0.0, 0.0, 350.0, 400.0, 400.0), 19308.8),
    (2, 1690.0, "01110101000100100111000111", (0.0, 2.4, 2.4, 2.4, 0.0, 4.0, 0.0, 4.0, 0.0, 0.0, 0.0, 34.8, 0.0, 0.0, 25.0, 0.0, 0.0, 155.0, 155.0, 155.0, 0.0, 0.0, 0.0, 350.0, 400.0, 400.0), 19208.0),
    (3, 1700.0, "01000000001010101011000111", (0.0, 2.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 30.71, 0.0, 26.89, 0.0, 25.0, 0.0, 155.0, 0.0, 155.0, 155.0, 0.0, 0.0, 0.0, 350.0, 400.0, 400.0), 18880.9),
    (4, 1750.0, "10100101010010001011000111", (2.4, 0.0, 2.4, 0.0, 0.0, 4.0, 0.0, 4.0, 0.0, 65.21, 0.0, 0.0, 56.99, 0.0, 0.0, 0.0, 155.0, 0.0, 155.0, 155.0, 0.0, 0.0, 0.0, 350.0, 400.0, 400.0), 19745.1),
    (5, 1850.0, "01010000011100101110000111", (0.0, 2.4, 0.0, 2.4, 0.0, 0.0, 0.0, 0.0, 0.0, 71.35, 68.11, 65.74, 0.0, 0.0, 25.0, 0.0, 155.0, 155.0, 155.0, 0.0, 0.0, 0.0, 0.0, 350.0, 400.0, 400.0), 21118.4),
    (6, 2000.0, "11011000101110110111000111", (2.4, 2.4, 0.0, 2.4, 2.4, 0.0, 0.0, 0.0, 4.0, 0.0, 76.0, 76.0, 76.0, 0.0, 75.0, 68.4, 0.0, 155.0, 155.0, 155.0, 0.0, 0.0, 0.0, 350.0, 400.0, 400.0), 24350.1),
    (7, 2430.0, "01111001011111011111001111", (0.0, 2.4, 2.4, 2.4, 2.4, 0.0, 0.0, 4.0, 0.0, 76.0, 76.0, 76.0, 76.0, 100.0, 0.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 0.0, 142.4, 350.0, 400.0, 400.0), 32100.4),
    (8, 2540.0, "11100111111111111111001111", (2.4, 2.4, 2.4, 0.0, 0.0, 4.0, 4.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 0.0, 142.8, 350.0, 400.0, 400.0), 34918.3),
    (9, 2600.0, "11001011111111111111001111", (8.7, 5.9, 0.0, 0.0, 2.4, 0.0, 4.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 0.0, 197.0, 350.0, 400.0, 400.0), 36210.3),
    (10, 2670.0, "11100011111111111111101111", (2.4, 2.4, 2.4, 0.0, 0.0, 0.0, 4.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 158.62, 0.0, 118.18, 350.0, 400.0, 400.0), 38034.6),
    (11, 2590.0, "11110010111111111111010111", (3.8, 2.4, 2.4, 2.4, 0.0, 0.0, 4.0, 0.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 197.0, 0.0, 350.0, 400.0, 400.0), 35788.0),
    (12, 2590.0, "11110010111111111111010111", (3.8, 2.4, 2.4, 2.4, 0.0, 0.0, 4.0, 0.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 197.0, 0.0, 350.0, 400.0, 400.0), 35788.0),
    (13, 2550.0, "01011111111111111111010111", (0.0, 2.4, 0.0, 2.4, 2.4, 4.0, 4.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 152.8, 0.0, 350.0, 400.0, 400.0), 35143.8),
    (14, 2620.0, "11111001011111101111011111", (2.4, 2.4, 2.4, 2.4, 2.4, 0.0, 0.0, 4.0, 0.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 0.0, 155.0, 155.0, 155.0, 155.0, 0.0, 175.51, 154.49, 350.0, 400.0, 400.0), 36861.1),
    (15, 2650.0, "11111110111111111111001111", (12.0, 12.0, 12.0, 12.0, 12.0, 9.98, 5.02, 0.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 0.0, 197.0, 350.0, 400.0, 400.0), 37650.7),
    (16, 2550.0, "01011111111111111111010111", (0.0, 2.4, 0.0, 2.4, 2.4, 4.0, 4.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 152.8, 0.0, 350.0, 400.0, 400.0), 35143.8),
    (17, 2530.0, "01110001111111111111001111", (0.0, 2.4, 2.4, 2.4, 0.0, 0.0, 0.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 0.0, 140.8, 350.0, 400.0, 400.0), 34334.6),
    (18, 2500.0, "11011101111111111111001111", (2.4, 2.4, 0.0, 2.4, 2.4, 4.0, 0.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 0.0, 104.4, 350.0, 400.0, 400.0), 33821.5),
    (19, 2550.0, "01011111111111111111010111", (0.0, 2.4, 0.0, 2.4, 2.4, 4.0, 4.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 152.8, 0.0, 350.0, 400.0, 400.0), 35143.8),
    (20, 2600.0, "11001011111111111111001111", (8.7, 5.9, 0.0, 0.0, 2.4, 0.0, 4.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 0.0, 197.0, 350.0, 400.0, 400.0), 36210.3),
    (21, 2480.0, "11001001111111111111010111", (2.4, 2.4, 0.0, 0.0, 2.4, 0.0, 0.0, 4.0, 4.0, 76.0, 76.0, 76.0, 76.0, 100.0, 100.0, 100.0, 155.0, 155.0, 155.0, 155.0, 0.0, 90.8, 0.0, 350.0, 400.0, 400.0), 33133.9),
    (22, 2200.0, "11000000000110011111110111", (2.4, 2.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 76.0, 76.0, 0.0, 0.0, 100.0, 155.0, 155.0, 155.0, 155.0, 96.4, 76.8, 0.0, 350.0, 400.0, 400.0), 28214.2),
    (23, 1840.0, "01010100000100001111000111", (0.0, 2.4, 0.0, 2.4, 0.0, 4.0, 0.0, 0.0, 0.0, 0.0, 0.0, 61.2, 0.0, 0.0, 0.0, 0.0, 155.0, 155.0, 155.0, 155.0, 0.0, 0.0, 0.0, 350.0, 400.0, 400.0), 20464.7),
)
