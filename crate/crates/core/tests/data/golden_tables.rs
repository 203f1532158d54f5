//! Reference matrices for the acceptance suite.
//! Format: one row per line, `label: entries... | margins...`.
//! Margins: `Proj.` (Borel q-Cartan), `Simp. Proj.` (monoid q-Cartan),
//! `Simp.` = row sum (decomposition matrices).

pub const QCARTAN_BOREL_A1: &str = "\
12: 1 . | 1
21: . 1 | 1";

pub const QCARTAN_BOREL_A2: &str = "\
123: 1 . . . . . | 1
132: . 1 . . q . | 2
213: . . 1 q . . | 2
231: . . . 1 . . | 1
312: . . . . 1 . | 1
321: . . . . . 1 | 1";

pub const QCARTAN_BOREL_A3: &str = "\
1234: 1 . . . . . . . . . . . . . . . . . . . . . . . | 1
1243: . 1 . . q . . . . . q q^2 . . . . q . q^2 . . . . . | 6
1324: . . 1 q . . . . . q . . q q^2 . q^2 q^3 . q q^2 . q . . | 10
1342: . . . 1 . . . . . . . . . q . . q^2 . . q . . . . | 4
1423: . . . . 1 . . . . . . . . . . . . . q . . . . . | 2
1432: . . . . . 1 . . . . . . . . . . q . . q . . q^2 . | 4
2134: . . . . . . 1 . q q^2 q . . . . . q . . . q^2 . . . | 6
2143: . . . . . . . 1 . q q q^2 . . . . . . q . q^2 q^3 . . | 7
2314: . . . . . . . . 1 q . . . . . . . . . . . . . . | 2
2341: . . . . . . . . . 1 . . . . . . . . . . . . . . | 1
2413: . . . . . . . . . . 1 q . . . . . . . . q q^2 . . | 4
2431: . . . . . . . . . . . 1 . . . . . . . . . q . . | 2
3124: . . . . . . . . . . . . 1 q . q q^2 . . . . . . . | 4
3142: . . . . . . . . . . . . . 1 . . q . . . . . . . | 2
3214: . . . . . . . . . . . . . . 1 q q q^2 . . . . . . | 4
3241: . . . . . . . . . . . . . . . 1 . q . . . . . . | 2
3412: . . . . . . . . . . . . . . . . 1 . . . . . . . | 1
3421: . . . . . . . . . . . . . . . . . 1 . . . . . . | 1
4123: . . . . . . . . . . . . . . . . . . 1 . . . . . | 1
4132: . . . . . . . . . . . . . . . . . . . 1 . . q . | 2
4213: . . . . . . . . . . . . . . . . . . . . 1 q . . | 2
4231: . . . . . . . . . . . . . . . . . . . . . 1 . . | 1
4312: . . . . . . . . . . . . . . . . . . . . . . 1 . | 1
4321: . . . . . . . . . . . . . . . . . . . . . . . 1 | 1";

pub const QCARTAN_M_A1: &str = "\
12: 1 . | 1 1
21: q 1 | 1 2";

pub const QCARTAN_M_A2: &str = "\
123: 1 . . . . . | 1 1
132: q 1 . . . . | 1 2
213: q . 1 . . . | 1 2
231: q . . 1 . . | 2 3
312: q . . . 1 . | 2 3
321: q^2 . . q q 1 | 1 6";

pub const QCARTAN_M_A3: &str = "\
1234: 1 . . . . . . . . . . . . . . . . . . . . . . . | 1 1
1243: q^2+q 1 . . . . . . . . . . . . . . q . . . . . . . | 1 8
1324: q^3+2q^2+q . 1 . . . . . . q^2+q . . . . . . . . q^2+q . . q . . | 1 22
1342: q . . 1 . . . . . . . . . . . . . . . . . . . . | 2 3
1423: q . . . 1 . . . . . . . . . . . . . . . . . . . | 2 3
1432: 2q^2 . . q q 1 . . . . . . . . . . q . . . . . . . | 1 12
2134: q^2+q . . . . . 1 . . . . . . . . . q . . . . . . . | 1 8
2143: 3q^2 q . . . . q 1 . q . . . . . . . . q . . . . . | 1 12
2314: q . . . . . . . 1 . . . . . . . . . . . . . . . | 2 3
2341: q . . . . . . . . 1 . . . . . . . . . . . . . . | 3 4
2413: q . . . . . . . . . 1 . . . . . . . . . . . . . | 4 5
2431: q^2 . . . . . . . . q . 1 . . . . . . . . . . . . | 4 8
3124: q . . . . . . . . . . . 1 . . . . . . . . . . . | 2 3
3142: q . . . . . . . . . . . . 1 . . . . . . . . . . | 4 5
3214: 2q^2 . . . . . . . q . . . q . 1 . q . . . . . . . | 1 12
3241: q^2 . . . . . . . . q . . . . . 1 . . . . . . . . | 4 8
3412: q . . . . . . . . . . . . . . . 1 . . . . . . . | 5 6
3421: q^2 . . . . . . . . q . . . . . . q 1 . . . . . . | 3 12
4123: q . . . . . . . . . . . . . . . . . 1 . . . . . | 3 4
4132: q^2 . . . . . . . . . . . . . . . . . q 1 . . . . | 4 8
4213: q^2 . . . . . . . . . . . . . . . . . q . 1 . . . | 4 8
4231: q^2 . . . . . . . . q . . . . . . . . q . . 1 . . | 5 12
4312: q^2 . . . . . . . . . . . . . . . q . q . . . 1 . | 3 12
4321: q^3 . . . . . . . . q^2 . . . . . . q^2 q q^2 . . q q 1 | 1 24";

pub const DECOMPOSITION_A1: &str = "\
12: 1 . | 1
21: . 1 | 1";

pub const DECOMPOSITION_A2: &str = "\
123: 1 . . . . . | 1
132: . 1 . . . . | 1
213: . . 1 . . . | 1
231: . . 1 1 . . | 2
312: . 1 . . 1 . | 2
321: . . . . . 1 | 1";

pub const DECOMPOSITION_A3: &str = "\
1234: 1 . . . . . . . . . . . . . . . . . . . . . . . | 1
1243: . 1 . . . . . . . . . . . . . . . . . . . . . . | 1
1324: . . 1 . . . . . . . . . . . . . . . . . . . . . | 1
1342: . . 1 1 . . . . . . . . . . . . . . . . . . . . | 2
1423: . 1 . . 1 . . . . . . . . . . . . . . . . . . . | 2
1432: . . . . . 1 . . . . . . . . . . . . . . . . . . | 1
2134: . . . . . . 1 . . . . . . . . . . . . . . . . . | 1
2143: . . . . . . . 1 . . . . . . . . . . . . . . . . | 1
2314: . . . . . . 1 . 1 . . . . . . . . . . . . . . . | 2
2341: . . . . . . 1 . 1 1 . . . . . . . . . . . . . . | 3
2413: . 1 . . . . 1 1 . . 1 . . . . . . . . . . . . . | 4
2431: . 1 . . . . . 1 . . 1 1 . . . . . . . . . . . . | 4
3124: . . 1 . . . . . . . . . 1 . . . . . . . . . . . | 2
3142: . . 1 1 . . . . . . . . 1 1 . . . . . . . . . . | 4
3214: . . . . . . . . . . . . . . 1 . . . . . . . . . | 1
3241: . . 1 . . . . . . . . . 1 . 1 1 . . . . . . . . | 4
3412: . . 1 1 . . . . . . . . 1 1 . . 1 . . . . . . . | 5
3421: . . . . . . . . . . . . . . 1 1 . 1 . . . . . . | 3
4123: . 1 . . 1 . . . . . . . . . . . . . 1 . . . . . | 3
4132: . . 1 1 . 1 . . . . . . . . . . . . . 1 . . . . | 4
4213: . . . . . . 1 1 . . 1 . . . . . . . . . 1 . . . | 4
4231: . . . . . . . 1 . . 1 1 . . . . . . . . 1 1 . . | 5
4312: . . . . . 1 . . . . . . . . . . . . . 1 . . 1 . | 3
4321: . . . . . . . . . . . . . . . . . . . . . . . 1 | 1";

