#include "qrd/golden.hpp"

namespace qrd::golden {

const std::vector<JacobiTable>& ternary_t3() {
    static const std::vector<JacobiTable> tables = {
        {14, 3, {
            {0, 0, 1},   {0, 6, 30},  {0, 7, 12},  {0, 8, 18},  {0, 9, 14},  {0, 10, 6},
            {1, 5, 78},  {1, 6, 72},  {1, 7, 126}, {1, 8, 78},  {1, 9, 90},  {1, 10, 36}, {1, 11, 6},
            {2, 4, 66},  {2, 5, 54},  {2, 6, 162}, {2, 7, 192}, {2, 8, 270}, {2, 9, 162}, {2, 10, 66},
            {3, 3, 8},   {3, 4, 18},  {3, 5, 58},  {3, 6, 80},  {3, 7, 180}, {3, 8, 166}, {3, 9, 110},
            {3, 11, 28},
        }},
        {14, 3, {
            {0, 0, 1},   {0, 6, 26},  {0, 7, 18},  {0, 8, 22},  {0, 9, 6},   {0, 10, 6},  {0, 11, 2},
            {1, 5, 90},  {1, 6, 54},  {1, 7, 114}, {1, 8, 102}, {1, 9, 90},  {1, 10, 30}, {1, 11, 6},
            {2, 4, 54},  {2, 5, 72},  {2, 6, 174}, {2, 7, 168}, {2, 8, 270}, {2, 9, 168}, {2, 10, 66},
            {3, 3, 12},  {3, 4, 12},  {3, 5, 54},  {3, 6, 88},  {3, 7, 180}, {3, 8, 164}, {3, 9, 110},
            {3, 11, 28},
        }},
    };
    return tables;
}

const std::vector<JacobiTable>& quaternary_t3() {
    static const std::vector<JacobiTable> tables = {
        {18, 3, {
            {0, 0, 1},    {0, 6, 81},    {0, 8, 72},    {0, 9, 318},   {0, 10, 855},  {0, 11, 1008},
            {0, 12, 783}, {0, 13, 630},  {0, 14, 288},  {0, 15, 60},
            {1, 5, 153},  {1, 7, 189},   {1, 8, 1350},  {1, 9, 4239},  {1, 10, 6048}, {1, 11, 7821},
            {1, 12, 8190},{1, 13, 5832}, {1, 14, 2556}, {1, 15, 486},
            {2, 4, 63},   {2, 6, 171},   {2, 7, 1242},  {2, 8, 5481},  {2, 9, 10584}, {2, 10, 16587},
            {2, 11, 24570}, {2, 12, 25416}, {2, 13, 17964}, {2, 14, 7290}, {2, 15, 1224},
            {3, 3, 9},    {3, 5, 27},    {3, 6, 354},   {3, 7, 1818},  {3, 8, 4392},  {3, 9, 9387},
            {3, 10, 18018}, {3, 11, 25380}, {3, 12, 25932}, {3, 13, 17010}, {3, 14, 6120}, {3, 15, 2145},
        }},
        {18, 3, {
            {0, 0, 1},    {0, 6, 84},    {0, 8, 63},    {0, 9, 354},   {0, 10, 846},  {0, 11, 882},
            {0, 12, 912}, {0, 13, 630},  {0, 14, 270},  {0, 15, 54},
            {1, 5, 144},  {1, 7, 216},   {1, 8, 1242},  {1, 9, 4266},  {1, 10, 6426}, {1, 11, 7434},
            {1, 12, 8190},{1, 13, 5886}, {1, 14, 2574}, {1, 15, 486},
            {2, 4, 72},   {2, 6, 144},   {2, 7, 1350},  {2, 8, 5454},  {2, 9, 10206}, {2, 10, 16974},
            {2, 11, 24570}, {2, 12, 25362}, {2, 13, 17946}, {2, 14, 7290}, {2, 15, 1224},
            {3, 3, 6},    {3, 5, 36},    {3, 6, 318},   {3, 7, 1827},  {3, 8, 4518},  {3, 9, 9258},
            {3, 10, 18018}, {3, 11, 25398}, {3, 12, 25938}, {3, 13, 17010}, {3, 14, 6120}, {3, 15, 2145},
        }},
    };
    return tables;
}

const std::vector<JacobiTable>& quaternary_t4() {
    static const std::vector<JacobiTable> tables = {
        {18, 4, {
            {0, 0, 1},    {0, 6, 54},   {0, 8, 21},    {0, 9, 168},   {0, 10, 288},  {0, 11, 144},
            {0, 12, 258}, {0, 13, 72},  {0, 14, 18},
            {1, 5, 120},  {1, 7, 168},  {1, 8, 744},   {1, 9, 2232},  {1, 10, 2952}, {1, 11, 2616},
            {1, 12, 2232},{1, 13, 1008},{1, 14, 216},
            {2, 4, 108},  {2, 6, 180},  {2, 7, 1368},  {2, 8, 5184},  {2, 9, 8424},  {2, 10, 10944},
            {2, 11, 13032}, {2, 12, 10260}, {2, 13, 4824}, {2, 14, 972},
            {3, 3, 24},   {3, 5, 72},   {3, 6, 888},   {3, 7, 3816},  {3, 8, 7992},  {3, 9, 15336},
            {3, 10, 24072}, {3, 11, 26976}, {3, 12, 20712}, {3, 13, 9072}, {3, 14, 1632},
            {4, 4, 18},   {4, 5, 96},   {4, 6, 873},   {4, 7, 2520},  {4, 8, 5424},  {4, 9, 12000},
            {4, 10, 18654}, {4, 11, 20760}, {4, 12, 14742}, {4, 13, 5712}, {4, 14, 2145},
        }},
        {18, 4, {
            {0, 0, 1},    {0, 6, 45},   {0, 8, 42},    {0, 9, 96},    {0, 10, 303},  {0, 11, 312},
            {0, 12, 129}, {0, 13, 72},  {0, 14, 24},
            {1, 5, 144},  {1, 7, 120},  {1, 8, 888},   {1, 9, 2208},  {1, 10, 2784}, {1, 11, 2616},
            {1, 12, 2232},{1, 13, 1056},{1, 14, 240},
            {2, 4, 90},   {2, 6, 198},  {2, 7, 1368},  {2, 8, 5166},  {2, 9, 7920},  {2, 10, 11718},
            {2, 11, 13032}, {2, 12, 10080}, {2, 13, 4752}, {2, 14, 972},
            {3, 3, 24},   {3, 5, 96},   {3, 6, 744},   {3, 7, 3864},  {3, 8, 8832},  {3, 9, 14304},
            {3, 10, 24072}, {3, 11, 27168}, {3, 12, 20784}, {3, 13, 9072}, {3, 14, 1632},
            {4, 2, 3},    {4, 4, 3},    {4, 5, 168},   {4, 6, 852},   {4, 7, 2184},  {4, 8, 5811},
            {4, 9, 12000},{4, 10, 18588}, {4, 11, 20736}, {4, 12, 14742}, {4, 13, 5712}, {4, 14, 2145},
        }},
        {18, 4, {
            {0, 0, 1},    {0, 6, 51},   {0, 8, 30},    {0, 9, 150},   {0, 10, 285},  {0, 11, 228},
            {0, 12, 153}, {0, 13, 102}, {0, 14, 24},
            {1, 5, 126},  {1, 7, 150},  {1, 8, 744},   {1, 9, 2262},  {1, 10, 2868}, {1, 11, 2778},
            {1, 12, 2112},{1, 13, 1020},{1, 14, 228},
            {2, 4, 108},  {2, 6, 180},  {2, 7, 1476},  {2, 8, 5112},  {2, 9, 8172},  {2, 10, 11088},
            {2, 11, 13212}, {2, 12, 10188}, {2, 13, 4788}, {2, 14, 972},
            {3, 3, 18},   {3, 5, 90},   {3, 6, 744},   {3, 7, 3882},  {3, 8, 8412},  {3, 9, 14982},
            {3, 10, 23952}, {3, 11, 27060}, {3, 12, 20748}, {3, 13, 9072}, {3, 14, 1632},
            {4, 2, 3},    {4, 4, 9},    {4, 5, 150},   {4, 6, 852},   {4, 7, 2352},  {4, 8, 5577},
            {4, 9, 12030},{4, 10, 18624}, {4, 11, 20748}, {4, 12, 14742}, {4, 13, 5712}, {4, 14, 2145},
        }},
        {18, 4, {
            {0, 0, 1},    {0, 6, 48},   {0, 8, 33},    {0, 9, 120},   {0, 10, 276},  {0, 11, 288},
            {0, 12, 174}, {0, 13, 72},  {0, 14, 12},
            {1, 5, 138},  {1, 7, 138},  {1, 8, 864},   {1, 9, 2298},  {1, 10, 2628}, {1, 11, 2694},
            {1, 12, 2232},{1, 13, 1068},{1, 14, 228},
            {2, 4, 90},   {2, 6, 198},  {2, 7, 1296},  {2, 8, 5058},  {2, 9, 8532},  {2, 10, 11214},
            {2, 11, 13032}, {2, 12, 10116}, {2, 13, 4788}, {2, 14, 972},
            {3, 3, 30},   {3, 5, 78},   {3, 6, 864},   {3, 7, 3918},  {3, 8, 8172},  {3, 9, 14898},
            {3, 10, 24072}, {3, 11, 27108}, {3, 12, 20748}, {3, 13, 9072}, {3, 14, 1632},
            {4, 4, 12},   {4, 5, 120},  {4, 6, 843},   {4, 7, 2412},  {4, 8, 5598},  {4, 9, 12000},
            {4, 10, 18612}, {4, 11, 20748}, {4, 12, 14742}, {4, 13, 5712}, {4, 14, 2145},
        }},
    };
    return tables;
}

JacobiPolynomial to_polynomial(const JacobiTable& table) {
    JacobiPolynomial poly(table.n, table.t);
    for (const auto& [m1, n1, count] : table.terms)
        poly.bump(static_cast<unsigned>(m1), static_cast<unsigned>(n1)) = count;
    return poly;
}

const std::vector<std::pair<unsigned, std::int64_t>>& ternary_harmonic3() {
    static const std::vector<std::pair<unsigned, std::int64_t>> terms = {
        {6, -312}, {7, 468}, {8, 312}, {9, -624}, {11, 156},
    };
    return terms;
}

const std::vector<std::pair<unsigned, std::int64_t>>& quaternary_harmonic3() {
    static const std::vector<std::pair<unsigned, std::int64_t>> terms = {
        {6, -1224}, {8, 3672}, {9, -14688}, {10, 3672}, {11, 51408}, {12, -52632}, {14, 7344}, {15, 2448},
    };
    return terms;
}

const std::vector<unsigned>& ternary_weight_set() {
    static const std::vector<unsigned> weights = {0, 6, 7, 8, 9, 10, 11, 12, 14};
    return weights;
}

const std::vector<unsigned>& quaternary_weight_set() {
    static const std::vector<unsigned> weights = {0, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18};
    return weights;
}

}  // namespace qrd::golden
