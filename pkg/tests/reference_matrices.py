"""Hand-copied reference matrices in the mixed view (binary part, space, quaternary part).

Quaternary symbols are listed one per Gray pair, in the column order in which
the matrices are usually displayed.
"""

G_12 = [  # rows y, v1, v2, u1
    "11111111 222222222222",
    "00110011 020211111111",
    "01010101 111102021313",
    "00001111 002200220022",
]

K_12 = [  # rows y, w1, w2, u1
    "11111111 222222222222",
    "00000000 000022222222",
    "00000000 222200002222",
    "00001111 002200220022",
]

S_12 = [  # v(00), v(10), v(01), v(11)
    "00000000 000000000000",
    "00110011 020211111111",
    "01010101 111102021313",
    "01100110 131313132020",
]

G_03 = [  # rows y, v1, v2, v3
    "11111111 2222222222222222222222222222",
    "00001111 0022002200221111111111111111",
    "00110011 0202111111110022002211331133",
    "01010101 1111020213130202131302021313",
]

K_03 = [  # rows y, w1, w2, w3
    "11111111 2222222222222222222222222222",
    "00000000 0000000000002222222222222222",
    "00000000 0000222222220000000022222222",
    "00000000 2222000022220000222200002222",
]

S_03 = [  # v(000), v(100), v(010), v(110), v(001), v(101), v(011), v(111)
    "00000000 0000000000000000000000000000",
    "00001111 0022002200221111111111111111",
    "00110011 0202111111110022002211331133",
    "00111100 0220113311331133113322002200",
    "01010101 1111020213130202131302021313",
    "01011010 1133022013311313202013132020",
    "01100110 1313131320200220133113312002",
    "01101001 1331133120021331200220023113",
]
