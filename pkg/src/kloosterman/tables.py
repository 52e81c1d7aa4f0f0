"""Built-in reference tables for the verification harness.

Four exact integer tables, reproduced bit-for-bit by the library:

    I   weight counts C_0..C_21 of the SL(2,8) trace code
    II  moments MK^0..MK^29 of Kloosterman sums over GF(8)
    III weight counts C_0..C_11 of the SL(2,16) trace code
    IV  moments MK^0..MK^11 of Kloosterman sums over GF(16)
"""

TABLE_I = (
    1,
    64,
    15844,
    2650560,
    332067914,
    33207770816,
    2761774095732,
    196480443747136,
    12206347634256355,
    672705382226871680,
    33298916433035363704,
    1495424065262442956416,
    61437005346735099526740,
    2325154356197975713774208,
    81546484920999191101202360,
    2663851840752718923500482944,
    81413971883002952517354367429,
    2337059898759141068388769445824,
    63230453927539041393172170525052,
    1617368453093893435845237341156928,
    39221184987526914436447793737809822,
    903954930188715550538753640492641088,
)

TABLE_II = (
    7,
    1,
    55,
    -47,
    871,
    -2399,
    17815,
    -71567,
    410311,
    -1894079,
    9942775,
    -48296687,
    245734951,
    -1215920159,
    6117864535,
    -30474531407,
    152717030791,
    -762552032639,
    3815859527095,
    -19069999543727,
    95377891993831,
    -476805777143519,
    2384279934194455,
    -11920646525541647,
    59605492064000071,
    -298020682011124799,
    1490123744982250615,
    -7450557720131373167,
    37252971614996505511,
    -186264309031963608479,
)

TABLE_III = (
    1,
    256,
    520072,
    706962176,
    720560061732,
    587401078798592,
    398943240589827320,
    232184965775802188544,
    118211170698394115200330,
    53483987453818691622983424,
    21773331292449548118228026776,
    8056132578206330016084726166784,
)

TABLE_IV = (
    15,
    1,
    239,
    289,
    7631,
    22081,
    300719,
    1343329,
    13118351,
    72973441,
    604249199,
    3760049569,
)

# (n, r) parameters and the quantity each table holds.
TABLE_PARAMS = {
    "I": {"kind": "weights", "n": 2, "r": 3, "values": TABLE_I},
    "II": {"kind": "moments", "n": 2, "r": 3, "values": TABLE_II},
    "III": {"kind": "weights", "n": 2, "r": 4, "values": TABLE_III},
    "IV": {"kind": "moments", "n": 2, "r": 4, "values": TABLE_IV},
}
