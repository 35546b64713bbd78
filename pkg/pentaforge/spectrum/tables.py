# Copyright © 2019-2021 HQS Quantum Simulations GmbH. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
# in compliance with the License. You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed under the License
# is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
# or implied. See the License for the specific language governing permissions and limitations under
# the License.
"""Recipe and ingredient tables of the PENT(4) and PENT(5) existence results

Recipe rows describe PENT(4, 44w + s) built from 3w copies of PENT(4, 13), one PENT(4, s)
and a 4-GDD of type 44^{3w} (3s + 5)^1. Ingredient rows describe PENT(4, r) built from u
copies of PENT(4, p), one PENT(4, q) and a 4-GDD of type (3p + 5)^u (3q + 5)^1.
"""

from typing import (
    Dict,
    NamedTuple,
    Tuple,
)
from pentaforge.core.gdd_type import GddType


class RecipeRow(NamedTuple):
    """Row of a PENT(4) recipe table: r = 44t + residue for t >= t_min, built for w >= w_min"""

    residue: int
    s: int
    w_min: int
    t_min: int

    def r(self, w: int) -> int:
        """Return the replication number produced for w

        Args:
            w: number of PENT(4, 13) triples

        Returns:
            int
        """
        return 44 * w + self.s

    def gdd_type(self, w: int) -> GddType:
        """Return the 4-GDD type 44^{3w} (3s + 5)^1

        Args:
            w: number of PENT(4, 13) triples

        Returns:
            GddType
        """
        return GddType([(44, 3 * w), (3 * self.s + 5, 1)])

    @property
    def first_r(self) -> int:
        """Smallest r of the family

        Returns:
            int
        """
        return self.r(self.w_min)


class IngredientRow(NamedTuple):
    """PENT(4, r) from u copies of PENT(4, p), one PENT(4, q) and a 4-GDD"""

    r: int
    u: int
    p: int
    q: int

    def gdd_type(self) -> GddType:
        """Return the 4-GDD type (3p + 5)^u (3q + 5)^1

        Returns:
            GddType
        """
        return GddType([(3 * self.p + 5, self.u), (3 * self.q + 5, 1)])


class ConstructionRow(NamedTuple):
    """PENT(5, r) from a TD-patched 5-GDD of type (gq)^u m^1 and PENT(5, r0)"""

    g: int
    u: int
    q: int
    r0: int
    values: Tuple[int, ...]


def _recipes(text: str) -> Tuple[RecipeRow, ...]:
    return tuple(RecipeRow(*(int(field) for field in item.split(':')))
                 for item in text.split())


def _ingredients(text: str) -> Tuple[IngredientRow, ...]:
    rows = []
    for item in text.split():
        fields = [int(field) for field in item.split(':')]
        if len(fields) == 3:
            fields.append(1)
        rows.append(IngredientRow(*fields))
    return tuple(rows)


#: PENT(4, 13)..PENT(4, 24) as the only direct ingredients
NO_OLP_WEAK = _recipes("""
    0:132:7:10 1:133:7:10 4:136:7:10 5:181:9:13 8:228:11:16 9:185:9:13 12:188:9:13
    13:13:1:1 16:192:10:14 17:17:2:2 20:20:2:2 21:21:2:2 24:24:2:2 25:157:8:11
    28:160:8:11 29:293:14:20 32:296:14:20 33:297:14:20 36:300:15:21 37:125:7:9
    40:304:15:21 41:129:7:9
""")

#: all directly constructed PENT(4, s) as ingredients
NO_OLP_STRONG = _recipes("""
    0:132:7:10 1:45:3:4 4:136:7:10 5:49:3:4 8:52:3:4 9:53:3:4 12:100:5:7 13:13:1:1
    16:60:4:5 17:17:2:2 20:20:2:2 21:21:2:2 24:24:2:2 25:69:4:5 28:160:8:11 29:29:2:2
    32:120:6:8 33:33:2:2 36:80:5:6 37:37:3:3 40:40:3:3 41:85:5:6
""")

#: one PENT(4, s) with exactly one opposite line pair
ONE_OLP = _recipes("""
    0:1496:69:103 1:1:2:2 4:1236:57:85 5:137:7:10 8:976:45:67 9:185:9:13
    12:1156:53:79 13:233:11:16 16:2876:132:197 17:281:14:20 20:3056:140:209
    21:417:20:29 24:2796:128:191 25:113:6:8 28:1876:86:128 29:205:10:14
    32:2276:104:155 33:209:10:14 36:2016:93:138 37:169:9:12 40:1756:81:120
    41:305:15:21
""")

RECIPE_TABLES: Dict[str, Tuple[RecipeRow, ...]] = {
    'no-olp-weak': NO_OLP_WEAK,
    'no-olp-strong': NO_OLP_STRONG,
    'one-olp': ONE_OLP,
}

#: ingredients s of NO_OLP_WEAK beyond PENT(4, 13)..PENT(4, 24)
WEAK_INGREDIENTS = _ingredients("""
    132:6:17:20 133:6:17:21 136:6:17:24 181:9:17:13 228:9:21:24 185:9:17:17
    188:9:17:20 192:9:17:24 157:6:21:21 160:6:21:24 293:15:17:13 296:12:21:24
    297:15:17:17 300:15:17:20 125:6:17:13 304:15:17:24 129:6:17:17
""")

#: values below the bounds of NO_OLP_STRONG that are not directly constructed
MISSING_INGREDIENTS = _ingredients("""
    129:6:17:17 176:6:21:40 188:9:17:20 192:9:17:24 201:6:29:17 204:6:29:20
    208:6:29:24 217:9:21:13 220:9:17:52 224:9:21:20 232:6:33:24 248:12:17:24
    252:6:37:20 256:6:37:24 261:6:37:29 264:12:17:40 268:6:33:60 276:12:17:52
    292:12:21:20 296:9:29:20 312:12:21:40 336:9:33:24 340:15:17:60 352:9:33:40
    356:18:17:20 380:15:21:40 396:18:17:60 400:9:37:52 424:6:65:24 468:24:17:20
""")

#: ingredients s of ONE_OLP, the filler is the degenerate PENT(4, 1) of type 8^1
ONE_OLP_INGREDIENTS = _ingredients("""
    1496:69:20 1236:57:20 137:6:21 976:45:20 185:6:29 1156:45:24 233:6:37
    2876:69:40 281:15:17 3056:141:20 417:12:33 2796:129:20 113:6:17 1876:45:40
    205:9:21 2276:105:20 209:6:33 2016:93:20 169:9:17 1756:81:20 305:6:49
""")

INGREDIENT_TABLES: Dict[str, Tuple[IngredientRow, ...]] = {
    'weak-ingredients': WEAK_INGREDIENTS,
    'missing-values': MISSING_INGREDIENTS,
    'one-olp-ingredients': ONE_OLP_INGREDIENTS,
}

#: directly constructed PENT(4, r) without opposite line pairs
DIRECT_PENT4_BASIC = (13, 17, 20, 21, 24)
DIRECT_PENT4_EXTRA = (29, 33, 37, 40, 45, 49, 52, 53, 60, 61, 65, 69, 77, 80, 81, 85, 93, 97,
                      100, 101, 108, 109, 117, 120, 125, 133, 140, 141, 149, 157, 160, 165, 173,
                      180)

#: directly constructed PENT(5, r) without opposite line pairs
DIRECT_PENT5 = (20, 25, 30, 35, 40)

#: PENT(5, r) from 5-GDDs of type (2q)^40 m^1, keyed by r0
M40_PUBLISHED: Dict[int, Tuple[int, ...]] = {
    20: (885, 890, 895, 900, 991, 1016, 1041, 1066),
    25: (1090, 1100, 1166, 1216, 1241, 1266, 1295),
    35: (1500, 1566, 1591, 1616, 1666, 1695, 1750, 1805, 1910, 1915),
    40: (1766, 1791, 1816, 1841, 1895, 1950, 2005, 2060, 2110, 2131),
}

#: PENT(5, r) from 5-GDDs of type (10q)^10 m^1, keyed by r0
M10_PUBLISHED: Dict[int, Tuple[int, ...]] = {
    106: (1206, 1231, 1256, 1281, 1365),
    131: (1481, 1506, 1531, 1560, 1670),
    181: (2031, 2060, 2275, 2280, 2296),
    206: (2310, 2365, 2420, 2475, 2525, 2546, 2611, 2630),
}


def _construction_rows(text: str) -> Tuple[ConstructionRow, ...]:
    rows = []
    for line in text.strip().splitlines():
        head, values = line.split(':')
        g, u, q, r0 = (int(field) for field in head.split())
        rows.append(ConstructionRow(g, u, q, r0, tuple(int(x) for x in values.split(','))))
    return tuple(rows)


CONSTRUCTION_TABLE = _construction_rows("""
2 40 43 20: 880,1066
2 40 53 25: 1085,1241,1295
2 40 73 35: 1495,1591,1915
2 40 83 40: 1700,1766,2060
2 64 73 35: 2371,2571,2681,2791,2891,3001,3101
2 64 83 40: 2696,2946,3056,3106,3316,3476,3526
10 10 43 106: 1181,1206,1231,1256,1281
10 10 53 131: 1456,1481,1506,1531
10 10 73 181: 2006,2031,2296,2361
10 10 83 206: 2281,2546,2611
10 16 43 106: 1826,1876,1926,2256
10 16 53 131: 2251,2301,2591,2781
10 16 73 181: 3101,3391,3581,3671,3831
10 16 83 206: 3526,3856,4106,4246,4286,4356
10 22 43 106: 2471,2546,3026,3116
10 22 53 131: 3046,3121,3451,3826,3841
10 22 73 181: 4196,4676,4766,5051,5081,5246,5291
10 22 83 206: 4771,5101,5476,5491,5746,5806,5821,6016
10 28 43 106: 3116,3216,3796,3936,3976
10 28 53 131: 3841,4181,4461,4621,4901
10 28 73 181: 5291,5771,6211,6291,6351,6391,6591,6751
10 28 83 206: 6016,6596,6736,6776,6876,7016,7316,7576,7636,7676
10 40 43 106: 4406,5336,5366,5576,5696
10 40 53 131: 5431,6211,6481,6541,6751,6781,7021
10 40 73 181: 7481,7961
42 10 43 450: 4965,4986,5070,5175,5280,5301,5385,5490,5616,5721,5805
42 10 53 555: 6120,6225,6330,6351,6435,6540,6666,6771,6855,6981,7170
42 14 43 450: 6771,6876,6981,7086,7191,7296,7611,7926
50 10 43 536: 5911,6036,6161,6286,6411,6986
50 10 53 661: 7286,7411,7536,7661
54 10 49 660: 7275,7896
70 10 27 471: 5196,5476,5511,5651,5791,5826,5931,5966,6001,6141
90 6 7 156: 1101
90 6 43 966: 6771,6906,6996,7011,7086,7221,7311,7416
90 6 49 1101: 7716,7806,7821,7896
98 10 27 660: 7275,7716
126 10 11 345: 3810,3936,4125,4251,4440
146 10 11 400: 4415,4780,4926,5145
166 10 11 455: 5020,5435,5601,5850
210 6 9 471: 3306,3586,3621
210 8 9 471: 4251,4531,4881
270 6 7 471: 3306,3621
450 6 7 786: 5511
630 6 7 1101: 7716,7821
""")
