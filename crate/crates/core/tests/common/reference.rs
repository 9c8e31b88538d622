//! Values produced by `oracle/reference_values.py` (mpmath, 60 digits).

pub const ML_1_8_2_AT_MINUS_5: f64 = 0.2691686722423308011915237;
pub const ML_1_8_2_AT_MINUS_1E4: f64 = 0.00002177816357537376993466269;
pub const ML_1_5_2_AT_MINUS_5: f64 = 0.2045644430064794761377253;
pub const ML_1_9_2_AT_MINUS_40: f64 = 0.04899910995168405038060335;
pub const ML_1_2_2_AT_MINUS_40: f64 = 0.02164839548559467427538847;
pub const ML_1_5_0_75_AT_MINUS_2_5: f64 = -0.3454900759683798060921662;
pub const PSI_KERNEL_0_75_AT_2: f64 = 1.227955675532329753432164;
pub const F_PART_0_9_AT_20: f64 = 0.05314787691069353101438362;
pub const F_PART_0_6_AT_5: f64 = 0.7071893417766346605980922;
pub const CHAR_FN_GRID: [(f64, f64, f64); 30] = [
    (0.6, 0.1, 0.9597158131242799590986208),
    (0.6, 1.0, 0.6716945413757290985650743),
    (0.6, 5.0, 0.1970466255768465595835235),
    (0.6, 10.0, 0.08950268517715260758634437),
    (0.6, 20.0, 0.04367337618280839499640008),
    (0.6, 40.0, 0.02164839548559467427538847),
    (0.7, 0.1, 0.9670112788331724890140328),
    (0.7, 1.0, 0.7151387063422381048773095),
    (0.7, 5.0, 0.198282347057639946948359),
    (0.7, 10.0, 0.06571422922767434572648838),
    (0.7, 20.0, 0.03367650542708910256657473),
    (0.7, 40.0, 0.01687562504868558314202203),
    (0.8, 0.1, 0.9734017056924349042949625),
    (0.8, 1.0, 0.7597343447049615059153277),
    (0.8, 5.0, 0.2176421479602721542039336),
    (0.8, 10.0, 0.02195964732539681055853346),
    (0.8, 20.0, 0.01210077481753340674615862),
    (0.8, 40.0, 0.0125382105525953039520163),
    (0.9, 0.1, 0.9788588105567124276033011),
    (0.9, 1.0, 0.8025829720111355011812356),
    (0.9, 5.0, 0.2691686722423308011915237),
    (0.9, 10.0, -0.01764501311274882416557168),
    (0.9, 20.0, -0.06987439677086454965004203),
    (0.9, 40.0, 0.03969125974222950507712581),
    (0.95, 0.1, 0.9812461214417466663053564),
    (0.95, 1.0, 0.8226217763355144663831733),
    (0.95, 5.0, 0.3072892580178467069716175),
    (0.95, 10.0, -0.02058223066446696361027057),
    (0.95, 20.0, -0.1410981640305684116886996),
    (0.95, 40.0, 0.04899910995168405038060335),
];
pub const GAMMA_TABLE: [(f64, f64); 14] = [
    (-49.5, 7.32226968923412703522501e-64),
    (-20.3, -6.435466204989351202455069e-19),
    (-3.7, 0.2516439959024226435101081),
    (-0.5, -3.544907701811032054596335),
    (0.001, 999.4237724845954661149822),
    (0.5, 1.772453850905516027298167),
    (0.8, 1.164229713725303373636321),
    (1.5, 0.8862269254527580136490837),
    (3.3, 2.683437381955768793596327),
    (10.1, 454760.7514415859508673358),
    (57.25, 1.950392932404769615755307e+75),
    (100.5, 9.32096310408271660834911e+156),
    (150.3, 1.71129699921947927812235e+261),
    (170.5, 5.56209241455999961070581e+305),
];
pub const ALPHA_0_9_FIRST_ROOTS: [f64; 2] = [
    9.456856889201905221097628,
    28.47687911936808615171682,
];
