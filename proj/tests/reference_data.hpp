// Reference values: critical-point distance tables and zero
// coordinates, as tabulated (4-5 significant digits).
#pragma once

#include <complex>
#include <vector>

namespace reference {

struct DistanceRow {
    int n;
    std::complex<double> witness;
    double distance;
};

inline const std::vector<DistanceRow> kDistancesBsK1 = {
    {2, {-0.04549, -0.5992}, 0.2602},
    {3, {0.25331, -0.28868}, 0.41997},
    {4, {0.32559, -0.13863}, 0.65268},
    {5, {0.34111, -0.0438}, 0.68222},
    {6, {0.33895, 0.01995}, 0.74277},
    {7, {0.33098, 0.06499}, 0.75514},
    {8, {0.32137, 0.09813}, 0.77831},
    {9, {-0.04905, 0.33164}, 0.78565},
    {10, {-0.02743, 0.33361}, 0.79638},
    {11, {-0.00958, 0.33426}, 0.80117},
    {12, {0.00536, 0.33412}, 0.80687},
    {13, {0.01804, 0.3335}, 0.81013},
    {14, {0.02892, 0.33261}, 0.81350},
    {15, {0.03835, 0.33155}, 0.81577},
    {16, {0.0466, 0.33042}, 0.81795},
    {17, {0.05388, 0.32925}, 0.81957},
    {18, {0.06033, 0.32808}, 0.82106},
    {19, {0.0661, 0.32693}, 0.82225},
    {20, {0.07129, 0.32581}, 0.82332},
};

inline const std::vector<DistanceRow> kDistancesBsK2 = {
    {2, {-0.89538, -0.4453}, 0.5528},
    {3, {0.40206, -0.49827}, 0.85603},
    {4, {0.47459, -0.2527}, 0.89688},
    {5, {-0.57262, -0.15872}, 0.85890},
    {6, {0.45849, -0.01783}, 0.90690},
    {7, {-0.35212, -0.6099}, 0.88012},
    {8, {0.41566, 0.08718}, 0.90725},
    {9, {-0.32375, -0.56075}, 0.88470},
    {10, {-0.0654, 0.40007}, 0.90141},
    {11, {-0.04147, 0.39636}, 0.88964},
    {12, {-0.02178, 0.39227}, 0.89539},
    {13, {-0.00532, 0.38809}, 0.88893},
    {14, {0.00861, 0.384}, 0.89015},
    {15, {0.02054, 0.38006}, 0.88620},
    {16, {0.03086, 0.37633}, 0.88568},
    {17, {0.03986, 0.3728}, 0.88297},
    {18, {0.04779, 0.36949}, 0.88182},
    {19, {0.05481, 0.36639}, 0.87977},
    {20, {0.06106, 0.36348}, 0.87845},
};

inline const std::vector<DistanceRow> kDistancesMassNear = {
    {2, {0.99163, 0.0}, 0.9440},
    {3, {1.1388, 0.0}, 1.5309},
    {4, {-0.97769, 0.0}, 1.5490},
    {5, {1.1848, 0.0}, 1.7297},
    {6, {-0.9932, 0.0}, 1.7641},
    {7, {1.1711, 0.0}, 1.7968},
    {8, {-0.99834, 0.0}, 1.8563},
    {9, {-0.94557, -0.32389}, 1.8579},
    {10, {-1.0005, 0.0}, 1.9036},
    {11, {-0.96404, -0.26952}, 1.9012},
    {12, {-1.0015, 0.0}, 1.9310},
    {13, {-0.97483, -0.23056}, 1.9275},
    {14, {-1.002, 0.0}, 1.9483},
    {15, {-0.98163, -0.20134}, 1.9446},
    {16, {-1.0022, 0.0}, 1.9598},
    {17, {-0.98617, -0.17864}, 1.9563},
    {18, {-1.0023, 0.0}, 1.9679},
    {19, {-0.98934, -0.16051}, 1.9647},
    {20, {-1.0023, 0.0}, 1.9738},
};

inline const std::vector<DistanceRow> kDistancesMassFar = {
    {2, {-0.45238, 0.38021}, 0.38021},
    {3, {-0.24822, 0.77992}, 1.2234},
    {4, {0.13378, 0.9529}, 1.6349},
    {5, {0.44282, 0.96439}, 1.7519},
    {6, {-0.28585, -1.04862}, 1.9307},
    {7, {-0.81931, -0.79845}, 2.0409},
    {8, {-0.60642, -1.03052}, 2.1514},
    {9, {-0.99493, -0.71892}, 2.2245},
    {10, {-0.82147, -0.94486}, 2.2841},
    {11, {-1.09907, -0.63389}, 2.3315},
    {12, {-0.95942, -0.84975}, 2.3671},
    {13, {-1.1631, -0.56021}, 2.3993},
    {14, {-1.05017, -0.76336}, 2.4222},
    {15, {-1.20452, -0.49917}, 2.4452},
    {16, {-1.11214, -0.68904}, 2.4609},
    {17, {-1.2326, -0.44888}, 2.4779},
    {18, {-1.15604, -0.62599}, 2.4892},
    {19, {-1.25243, -0.40715}, 2.5022},
    {20, {-1.18814, -0.57248}, 2.5107},
};

struct ZeroList {
    int degree;
    std::vector<std::complex<double>> zeros;
};

inline const std::vector<ZeroList> kZerosBsK1 = {
    {10, {
        {-0.343, -0.124},
        {-0.335, 0.093},
        {-0.271, -0.47},
        {-0.215, 0.262},
        {-0.198, -0.344},
        {-0.027, 0.333},
        {0.064, -0.359},
        {0.248, -0.243},
        {0.302, 0.143},
        {0.334, -0.0557},
    }},
    {20, {
        {-0.3438942123831552, -0.023836772689916352},
        {-0.3311833801254467, 0.08174390421105461},
        {-0.32429559916136386, -0.13076020662489168},
        {-0.2882224810856428, 0.1774301993002357},
        {-0.2715541484374781, -0.23098081144177066},
        {-0.2624511763208995, -0.45457877189401574},
        {-0.2193045321285863, 0.25519820929884734},
        {-0.18111425398040162, -0.3136990898689894},
        {-0.13085859523410467, 0.30844246090476546},
        {-0.06425817627657768, -0.35066319677079166},
        {-0.030971843883924308, 0.3326437904324378},
        {0.048906138839423456, -0.34622833052168245},
        {0.07128977245797584, 0.3258102646306653},
        {0.15130385549787492, -0.3097395104832117},
        {0.2363839877140184, -0.24594126839430788},
        {0.2465150797548988, 0.22464388629395193},
        {0.29777030053536147, -0.1608928909118287},
        {0.30356389486760027, 0.13949949161069475},
        {0.33066039831739313, -0.062324191338992675},
        {0.3325483043663678, 0.04089436267610281},
    }},
    {30, {
        {-0.3401, 0.00795},
        {-0.3362, -0.06303},
        {-0.3296, 0.07766},
        {-0.3178, -0.1326},
        {-0.3054, 0.1434},
        {-0.2851, -0.1981},
        {-0.2685, 0.2025},
        {-0.2583, -0.4474},
        {-0.238, -0.257},
        {-0.2205, 0.2528},
        {-0.176, -0.3049},
        {-0.1636, 0.2921},
        {-0.1036, -0.3346},
        {-0.0999, 0.319},
        {-0.03222, 0.3323},
        {-0.02903, -0.346},
        {0.03665, 0.3315},
        {0.04409, -0.3415},
        {0.1039, 0.3168},
        {0.1135, -0.3227},
        {0.1769, -0.2905},
        {0.2224, 0.2484},
        {0.2321, -0.2466},
        {0.2688, 0.1975},
        {0.2769, -0.1928},
        {0.3039, 0.1382},
        {0.3097, -0.1313},
        {0.3262, 0.07298},
        {0.3292, -0.0646},
        {0.3348, 0.004421},
    }},
    {40, {
        {-0.3379, -0.02939},
        {-0.3374, 0.02357},
        {-0.3303, -0.0821},
        {-0.3288, 0.07559},
        {-0.3145, -0.1334},
        {-0.3123, 0.1255},
        {-0.2908, -0.1822},
        {-0.2885, 0.1722},
        {-0.2594, -0.2273},
        {-0.2579, 0.2145},
        {-0.2562, -0.4438},
        {-0.2212, 0.2516},
        {-0.2202, -0.2675},
        {-0.1793, 0.2825},
        {-0.1736, -0.3007},
        {-0.1332, 0.3065},
        {-0.1216, -0.3245},
        {-0.08399, 0.3232},
        {-0.06716, -0.3383},
        {-0.03286, 0.3321},
        {-0.01235, -0.343},
        {0.01898, 0.333},
        {0.04173, -0.3391},
        {0.07032, 0.3259},
        {0.09403, -0.3271},
        {0.1199, 0.311},
        {0.1435, -0.3073},
        {0.1891, -0.2804},
        {0.2094, 0.2594},
        {0.2298, -0.2469},
        {0.2471, 0.2239},
        {0.2649, -0.2077},
        {0.2789, 0.1829},
        {0.2934, -0.1638},
        {0.304, 0.1376},
        {0.3147, -0.1161},
        {0.3219, 0.08887},
        {0.3284, -0.06576},
        {0.3321, 0.03793},
        {0.3343, -0.01402},
    }},
};

inline const std::vector<ZeroList> kZerosBsK2 = {
    {10, {
        {-0.455, -0.1669},
        {-0.4423, 0.1058},
        {-0.3406, -0.4629},
        {-0.2947, 0.3153},
        {-0.2306, -0.5264},
        {-0.0654, 0.4001},
        {0.08295, -0.4775},
        {0.3128, -0.3301},
        {0.3792, 0.1434},
        {0.4204, -0.09756},
    }},
    {20, {
        {-0.4091, -0.03467},
        {-0.3946, 0.08774},
        {-0.3869, -0.159},
        {-0.3456, 0.1985},
        {-0.3279, -0.2769},
        {-0.2743, -0.4751},
        {-0.267, 0.2883},
        {-0.2218, -0.3842},
        {-0.1663, 0.3492},
        {-0.07584, -0.4225},
        {-0.05318, 0.3756},
        {0.05577, -0.4145},
        {0.06106, 0.3635},
        {0.1745, -0.3716},
        {0.2733, -0.2979},
        {0.2843, 0.2346},
        {0.3447, -0.2},
        {0.3519, 0.1417},
        {0.3831, -0.08706},
        {0.3855, 0.03061},
    }},
    {30, {
        {-0.3872, 0.003888},
        {-0.3827, -0.07561},
        {-0.3758, 0.08189},
        {-0.3623, -0.1536},
        {-0.3491, 0.1554},
        {-0.3261, -0.2275},
        {-0.3083, 0.2215},
        {-0.2741, -0.2951},
        {-0.2667, -0.4619},
        {-0.2554, 0.2775},
        {-0.2032, -0.352},
        {-0.1925, 0.3213},
        {-0.1223, 0.3508},
        {-0.1185, -0.3849},
        {-0.04807, 0.3649},
        {-0.03396, -0.3962},
        {0.02702, 0.3625},
        {0.0481, -0.3906},
        {0.09929, 0.3426},
        {0.1259, -0.3693},
        {0.197, -0.3334},
        {0.2471, 0.2573},
        {0.2588, -0.2845},
        {0.3005, 0.2047},
        {0.3091, -0.2246},
        {0.34, 0.1408},
        {0.346, -0.1563},
        {0.365, 0.06947},
        {0.368, -0.08238},
        {0.3744, -0.006046},
    }},
    {40, {
        {-0.3751, -0.03613},
        {-0.3747, 0.02195},
        {-0.3667, -0.09396},
        {-0.3655, 0.07897},
        {-0.3495, -0.1503},
        {-0.3477, 0.1337},
        {-0.3236, -0.204},
        {-0.3219, 0.1848},
        {-0.2894, -0.254},
        {-0.2887, 0.2311},
        {-0.2625, -0.4547},
        {-0.2489, 0.2716},
        {-0.2465, -0.2991},
        {-0.2035, 0.3054},
        {-0.1945, -0.3368},
        {-0.1536, 0.3315},
        {-0.1358, -0.363},
        {-0.1004, 0.3495},
        {-0.07527, -0.3776},
        {-0.04523, 0.3587},
        {-0.01486, -0.3823},
        {0.01045, 0.359},
        {0.04456, -0.3778},
        {0.06519, 0.3498},
        {0.102, -0.3646},
        {0.1174, 0.3306},
        {0.1563, -0.3429},
        {0.2064, -0.3135},
        {0.2276, 0.267},
        {0.2511, -0.277},
        {0.2704, 0.2314},
        {0.2896, -0.2343},
        {0.3056, 0.1885},
        {0.321, -0.1864},
        {0.3333, 0.1402},
        {0.3445, -0.1345},
        {0.3528, 0.08782},
        {0.3597, -0.07973},
        {0.3639, 0.03278},
        {0.3662, -0.02353},
    }},
};

inline const std::vector<ZeroList> kZerosMassNear = {
    {10, {
        {-1.0005, 0.0},
        {1.1433, 0.0},
        {-0.82687, -0.56264},
        {-0.82687, 0.56264},
        {-0.36399, -0.93073},
        {-0.36399, 0.93073},
        {0.23348, -0.97212},
        {0.23348, 0.97212},
        {0.76712, -0.65585},
        {0.76712, 0.65585},
    }},
    {20, {
        {-1.0023, 0.0},
        {1.0883, 0.0},
        {-0.95568, -0.30195},
        {-0.95568, 0.30195},
        {-0.82009, -0.57592},
        {-0.82009, 0.57592},
        {-0.60792, -0.79643},
        {-0.60792, 0.79643},
        {-0.33851, -0.94283},
        {-0.33851, 0.94283},
        {-0.036502, -1.0011},
        {-0.036502, 1.0011},
        {0.27054, -0.96499},
        {0.27054, 0.96499},
        {0.55464, -0.83663},
        {0.55464, 0.83663},
        {0.79029, -0.62579},
        {0.79029, 0.62579},
        {0.95797, -0.34771},
        {0.95797, 0.34771},
    }},
    {30, {
        {-1.002, 0.0},
        {1.0636, 0.0},
        {-0.98088, -0.20473},
        {-0.98088, 0.20473},
        {-0.91831, -0.40083},
        {-0.91831, 0.40083},
        {-0.81693, -0.58005},
        {-0.81693, 0.58005},
        {-0.68096, -0.73482},
        {-0.68096, 0.73482},
        {-0.51608, -0.85858},
        {-0.51608, 0.85858},
        {-0.32916, -0.94606},
        {-0.32916, 0.94606},
        {-0.12801, -0.99345},
        {-0.12801, 0.99345},
        {0.078993, -0.99862},
        {0.078993, 0.99862},
        {0.2832, -0.96116},
        {0.2832, 0.96116},
        {0.47612, -0.88237},
        {0.47612, 0.88237},
        {0.64975, -0.76521},
        {0.64975, 0.76521},
        {0.79702, -0.61408},
        {0.79702, 0.61408},
        {0.91222, -0.43448},
        {0.91222, 0.43448},
        {0.99196, -0.23196},
        {0.99196, 0.23196},
    }},
    {40, {
        {-1.0017, 0.0},
        {1.0498, 0.0},
        {-0.98971, -0.15464},
        {-0.98971, 0.15464},
        {-0.95395, -0.30558},
        {-0.95395, 0.30558},
        {-0.8953, -0.4492},
        {-0.8953, 0.4492},
        {-0.81515, -0.58206},
        {-0.81515, 0.58206},
        {-0.71541, -0.70098},
        {-0.71541, 0.70098},
        {-0.59844, -0.80309},
        {-0.59844, 0.80309},
        {-0.46704, -0.88593},
        {-0.46704, 0.88593},
        {-0.32431, -0.94749},
        {-0.32431, 0.94749},
        {-0.17366, -0.98627},
        {-0.17366, 0.98627},
        {-0.018663, -1.0013},
        {-0.018663, 1.0013},
        {0.13699, -0.99214},
        {0.13699, 0.99214},
        {0.28959, -0.95895},
        {0.28959, 0.95895},
        {0.43553, -0.90245},
        {0.43553, 0.90245},
        {0.57135, -0.82387},
        {0.57135, 0.82387},
        {0.69386, -0.72495},
        {0.69386, 0.72495},
        {0.8002, -0.60787},
        {0.8002, 0.60787},
        {0.888, -0.47517},
        {0.888, 0.47517},
        {0.95552, -0.32953},
        {0.95552, 0.32953},
        {1.0022, -0.17315},
        {1.0022, 0.17315},
    }},
};

inline const std::vector<ZeroList> kZerosMassFar = {
    {10, {
        {-1.2007, -0.3518},
        {-1.2007, 0.3518},
        {-0.82147, -0.94486},
        {-0.82147, 0.94486},
        {-0.1814, -1.2407},
        {-0.1814, 1.2407},
        {0.51981, -1.1448},
        {0.51981, 1.1448},
        {1.0649, -0.68221},
        {1.0649, 0.68221},
    }},
    {20, {
        {-1.3041, -0.19665},
        {-1.3041, 0.19665},
        {-1.1881, -0.57248},
        {-1.1881, 0.57248},
        {-0.96649, -0.89742},
        {-0.96649, 0.89742},
        {-0.65885, -1.1426},
        {-0.65885, 1.1426},
        {-0.29255, -1.2861},
        {-0.29255, 1.2861},
        {0.099901, -1.3153},
        {0.099901, 1.3153},
        {0.48367, -1.2274},
        {0.48367, 1.2274},
        {0.82475, -1.0301},
        {0.82475, 1.0301},
        {1.0931, -0.74067},
        {1.0931, 0.74067},
        {1.2664, -0.38437},
        {1.2664, 0.38437},
    }},
    {30, {
        {-1.3208, -0.13435},
        {-1.3208, 0.13435},
        {-1.2667, -0.39754},
        {-1.2667, 0.39754},
        {-1.1607, -0.64445},
        {-1.1607, 0.64445},
        {-1.0072, -0.86497},
        {-1.0072, 0.86497},
        {-0.8124, -1.0501},
        {-0.8124, 1.0501},
        {-0.58433, -1.1921},
        {-0.58433, 1.1921},
        {-0.3323, -1.2854},
        {-0.3323, 1.2854},
        {-0.066633, -1.326},
        {-0.066633, 1.326},
        {0.20179, -1.3123},
        {0.20179, 1.3123},
        {0.462, -1.2448},
        {0.462, 1.2448},
        {0.70335, -1.1263},
        {0.70335, 1.1263},
        {0.91599, -0.96156},
        {0.91599, 0.96156},
        {1.0913, -0.75732},
        {1.0913, 0.75732},
        {1.2223, -0.52189},
        {1.2223, 0.52189},
        {1.3042, -0.26517},
        {1.3042, 0.26517},
    }},
    {40, {
        {-1.3263, -0.10184},
        {-1.3263, 0.10184},
        {-1.2952, -0.30314},
        {-1.2952, 0.30314},
        {-1.2338, -0.49734},
        {-1.2338, 0.49734},
        {-1.1434, -0.67987},
        {-1.1434, 0.67987},
        {-1.0262, -0.84647},
        {-1.0262, 0.84647},
        {-0.88493, -0.99322},
        {-0.88493, 0.99322},
        {-0.72291, -1.1167},
        {-0.72291, 1.1167},
        {-0.54395, -1.214},
        {-0.54395, 1.214},
        {-0.35222, -1.2828},
        {-0.35222, 1.2828},
        {-0.15223, -1.3215},
        {-0.15223, 1.3215},
        {0.051342, -1.3293},
        {0.051342, 1.3293},
        {0.25372, -1.3059},
        {0.25372, 1.3059},
        {0.45017, -1.2519},
        {0.45017, 1.2519},
        {0.63609, -1.1685},
        {0.63609, 1.1685},
        {0.80711, -1.0576},
        {0.80711, 1.0576},
        {0.95926, -0.922},
        {0.95926, 0.922},
        {1.089, -0.7647},
        {1.089, 0.7647},
        {1.1933, -0.58942},
        {1.1933, 0.58942},
        {1.2699, -0.4003},
        {1.2699, 0.4003},
        {1.3171, -0.20204},
        {1.3171, 0.20204},
    }},
};

} // namespace reference
