"""Codebooks as printed in the worked examples, in their original digit-string form.

Listing order is kept as printed; comparisons are done on sets.
"""


def words(*digit_strings):
    return {tuple(int(ch) for ch in s) for s in digit_strings}


A13 = [words("0", "1"), words("0", "2")]
A15 = [words("0", "1", "2", "3"), words("0", "4")]
A19 = [words(*"01234567"), words("0", "8")]

A23 = [
    words("00", "11"),
    words("00", "22"),
    words("02", "01", "00", "10"),
    words("02", "20"),
]

A25 = [
    words("00", "11", "22", "33"),
    words("00", "44"),
    words("04", "03", "02", "01", "00", "10", "20", "30"),
    words("04", "40"),
]

A43 = [
    words("0000", "1111"),
    words("0000", "2222"),
    words("0202", "0101", "0000", "1010"),
    words("0202", "2020"),
    words("0022", "0011", "0000", "1100"),
    words("0022", "2200"),
    words("0220", "0120", "0020", "0021", "0022", "0012", "0002", "1002"),
    words("0220", "2002"),
]

A35 = [
    words("000", "111", "222", "333"),
    words("000", "444"),
    words("040", "030", "020", "010", "000", "101", "202", "303"),
    words("040", "404"),
    words("004", "003", "002", "001", "000", "100", "200", "300"),
    words("004", "400"),
]

# Printed listing of the length-7 ternary code. Entry 7 lists two words
# twice; users 9..14 contain the symbol 3.
A73_PRINTED = [
    words("0000000", "1111111"),
    words("0000000", "2222222"),
    words("0202020", "0101010", "0000000", "1010101"),
    words("0202020", "2020202"),
    words("0022002", "0011001", "0000000", "1100110"),
    words("0022002", "2200220"),
    words("0220022", "0120012", "0020002", "0120012", "0022002", "0012001", "0020002", "1002100"),
    words("0220022", "2002200"),
    words("0000333", "0000222", "0000111", "0000000"),
    words("0000333", "1110000"),
    words("0100303", "0000303", "0000313", "0000323", "0000333", "0000232", "0000131", "0000030"),
    words("0100303", "1010030"),
    words("0010330", "0000330", "0000331", "0000332", "0000333", "0000233", "0000133", "0000033"),
    words("0010330", "1000033"),
]

# User 7 recomputed by appending the first three symbols of each word of
# user 7 of the length-4 code.
A73_USER7_DERIVED = words("0220022", "0120012", "0020002", "0021002",
                          "0022002", "0012001", "0002000", "1002100")

# Users 9..14 recomputed from the length-3 5-ary code shifted by (5-1)/2 = 2.
A73_USERS_9_14_DERIVED = [
    words("0000000", "0000111", "0000222", "1110000"),
    words("0000222", "2220000"),
    words("0000020", "0000121", "0000202", "0000212", "0000222", "0100202", "0200202", "1010020"),
    words("0200202", "2020020"),
    words("0000022", "0000122", "0000220", "0000221", "0000222", "0010220", "0020220", "1000022"),
    words("0020220", "2000022"),
]

# Rates from the comparison table, printed as "x+l" with l = floor(log2(k-1)).
RATE_TABLE = [  # (users, length, printed rate minus l)
    (8, 4, 2.000),
    (14, 7, 2.286),
    (20, 10, 2.500),
    (26, 13, 2.692),
    (32, 16, 3.000),
]
