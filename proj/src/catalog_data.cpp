#include "catalog_data.hpp"

namespace symstress::detail {

// Joint coordinates and bar lists of the figure frameworks, joints in drawing order.
const std::vector<RawFigure>& raw_figures() {
    static const std::vector<RawFigure> figures = {
        {"fig2a",
         {{0, 0}, {-1, -1}, {-2, -1}, {1, -1}, {2, -1}, {0, -1.5},
          {0, -2.5}},
         {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}, {2, 6}, {4, 6}, {1, 5}, {3, 5},
          {5, 6}}},
        {"fig2b",
         {{-0.5, -0.5}, {0.5, -0.5}, {-0.5, -1.5}, {0.5, -1.5}, {-1, 0}, {1, 0},
          {-1.5, -2.5}, {1.5, -2.5}},
         {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 7}, {6, 7}, {0, 4}, {1, 5},
          {2, 6}, {3, 7}}},
        {"fig2c",
         {{-1.5, 0}, {1.5, 0}, {-1.5, -2.5}, {1.5, -2.5}, {-0.8, -0.9}, {0.8, -1.6}},
         {{0, 4}, {2, 4}, {0, 2}, {1, 3}, {3, 5}, {1, 5}, {0, 1}, {2, 3}, {4, 5}}},
        {"fig3",
         {{-1, 0}, {1, 0}, {0, 1.33333}, {-3, -0.66666}, {3, -0.66666}, {0, 3.333333}},
         {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}},
        {"fig4a",
         {{0, 0}, {0, 1}, {0, -1}, {-1, 0}, {1, 0}, {-1, 0.8},
          {1, 0.8}, {-1.2, -1.1}, {1.2, -1.1}, {-0.5, 0.5}, {0.5, 0.5}, {-0.5, -0.5},
          {0.5, -0.5}},
         {{1, 5}, {1, 6}, {5, 9}, {1, 9}, {1, 10}, {6, 10}, {3, 5}, {4, 6}, {0, 9}, {0, 10},
          {3, 9}, {4, 10}, {0, 11}, {0, 12}, {3, 11}, {4, 12}, {3, 7}, {4, 8}, {7, 11}, {8, 12},
          {2, 11}, {2, 12}, {2, 7}, {2, 8}}},
        {"fig4b",
         {{0, 0}, {0, 0.8}, {0, 1.2}, {0, -0.5}, {0, -1.2}, {-0.6, 0.8},
          {0.6, 0.8}, {-0.9, 0}, {0.9, 0}, {-0.8, -0.5}, {0.8, -0.5}, {-1.6, 0.2},
          {1.6, 0.2}},
         {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 7}, {0, 8}, {1, 5}, {1, 6}, {3, 9}, {3, 10},
          {2, 5}, {2, 6}, {5, 7}, {7, 9}, {4, 9}, {4, 10}, {6, 8}, {8, 10}, {9, 11}, {7, 11},
          {5, 11}, {8, 12}, {10, 12}, {6, 12}}},
        {"fig4c",
         {{-0.4, 0.5}, {0.4, 0.5}, {-0.7, -0.5}, {0.7, -0.5}, {-0.8, 1}, {0.8, 1},
          {-0.8, -1}, {0.8, -1}, {-1.5, 0.8}, {1.5, 0.8}, {-1.5, -0.8}, {1.5, -0.8}},
         {{0, 1}, {1, 3}, {2, 3}, {0, 2}, {0, 4}, {0, 8}, {1, 5}, {1, 9}, {2, 10}, {2, 6},
          {3, 7}, {3, 11}, {4, 5}, {5, 9}, {7, 11}, {9, 11}, {6, 7}, {6, 10}, {8, 10}, {4, 8}}},
        {"fig6a",
         {{-0.4, 0}, {0.4, 0}, {-0.4, 0.8}, {0.4, 0.8}, {-0.4, -0.8}, {0.4, -0.8},
          {0, 1.3}, {0, -1.3}, {-1.2, 0.8}, {1.2, 0.8}, {-1.2, 0}, {1.2, 0},
          {-1.2, -0.8}, {1.2, -0.8}, {-1.7, 0}, {1.7, 0}},
         {{0, 2}, {0, 4}, {0, 10}, {2, 6}, {2, 8}, {4, 7}, {4, 12}, {7, 12}, {10, 12}, {8, 10},
          {6, 8}, {10, 14}, {8, 14}, {12, 14}, {1, 3}, {1, 5}, {1, 11}, {3, 6}, {3, 9}, {5, 7},
          {5, 13}, {7, 13}, {11, 13}, {9, 11}, {6, 9}, {11, 15}, {9, 15}, {13, 15}, {2, 3}, {0, 1},
          {4, 5}}},
        {"fig6b",
         {{0, 0.3}, {0, -0.3}, {-0.5, 0.8}, {0.5, 0.8}, {-0.5, 1.3}, {0.5, 1.3},
          {-0.5, -0.8}, {0.5, -0.8}, {-0.5, -1.3}, {0.5, -1.3}, {-1, 0.3}, {-1, -0.3},
          {-1.5, 1}, {-1.5, -1}, {1, 0.3}, {1, -0.3}, {1.5, 1}, {1.5, -1}},
         {{0, 1}, {0, 3}, {0, 2}, {1, 6}, {1, 7}, {2, 4}, {3, 5}, {6, 8}, {7, 9}, {2, 3},
          {4, 5}, {6, 7}, {8, 9}, {0, 10}, {1, 11}, {2, 10}, {6, 11}, {10, 11}, {4, 12}, {2, 12},
          {10, 12}, {8, 13}, {6, 13}, {11, 13}, {0, 14}, {1, 15}, {3, 14}, {7, 15}, {14, 15}, {5, 16},
          {3, 16}, {14, 16}, {9, 17}, {7, 17}, {15, 17}, {12, 13}, {16, 17}}},
        {"fig8a",
         {{-0.4, 0.4}, {-0.4, 1.2}, {-0.4, 2}, {0.4, 0.4}, {0.4, 1.2}, {0.4, 2},
          {-0.4, -0.4}, {-0.4, -1.2}, {-0.4, -2}, {0.4, -0.4}, {0.4, -1.2}, {0.4, -2},
          {-1.2, 1.2}, {-1.2, 0.4}, {-1.2, -0.4}, {-1.2, -1.2}, {1.2, 1.2}, {1.2, 0.4},
          {1.2, -0.4}, {1.2, -1.2}, {-1.8, 1.8}, {-2, 0.4}, {-2, -0.4}, {-1.8, -1.8},
          {1.8, 1.8}, {2, 0.4}, {2, -0.4}, {1.8, -1.8}},
         {{0, 1}, {1, 2}, {0, 6}, {6, 7}, {7, 8}, {12, 13}, {13, 14}, {14, 15}, {20, 21}, {21, 22},
          {22, 23}, {2, 20}, {2, 12}, {12, 20}, {1, 12}, {0, 13}, {6, 14}, {7, 15}, {8, 15}, {8, 23},
          {15, 23}, {15, 22}, {14, 22}, {13, 21}, {12, 21}, {3, 4}, {4, 5}, {3, 9}, {9, 10}, {10, 11},
          {16, 17}, {17, 18}, {18, 19}, {24, 25}, {25, 26}, {26, 27}, {5, 24}, {5, 16}, {16, 24}, {4, 16},
          {3, 17}, {9, 18}, {10, 19}, {11, 19}, {11, 27}, {19, 27}, {19, 26}, {18, 26}, {17, 25}, {16, 25},
          {2, 5}, {1, 4}, {0, 3}, {6, 9}, {7, 10}, {8, 11}}},
        {"fig8b",
         {{-0.4, 0.8}, {-0.4, 1.4}, {-0.4, 2}, {0, 2.6}, {0.4, 0.8}, {0.4, 1.4},
          {0.4, 2}, {-0.4, -0.8}, {-0.4, -1.4}, {-0.4, -2}, {0.4, -0.8}, {0.4, -1.4},
          {0.4, -2}, {0, -2.6}, {-0.8, 0.4}, {-1.4, 0.4}, {-2, 0.4}, {-2.6, 0},
          {-0.8, -0.4}, {-1.4, -0.4}, {-2, -0.4}, {0.8, 0.4}, {1.4, 0.4}, {2, 0.4},
          {2.6, 0}, {0.8, -0.4}, {1.4, -0.4}, {2, -0.4}, {-0.9, 1.9}, {-2.1, 2.1},
          {-1.9, 0.9}, {-0.9, 2.5}, {-2.5, 0.9}, {0.9, 1.9}, {2.1, 2.1}, {1.9, 0.9},
          {0.9, 2.5}, {2.5, 0.9}, {-0.9, -1.9}, {-2.1, -2.1}, {-1.9, -0.9}, {-0.9, -2.5},
          {-2.5, -0.9}, {0.9, -1.9}, {2.1, -2.1}, {1.9, -0.9}, {0.9, -2.5}, {2.5, -0.9}},
         {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {3, 6}, {7, 8}, {8, 9}, {9, 13}, {10, 11},
          {11, 12}, {12, 13}, {14, 15}, {15, 16}, {16, 17}, {18, 19}, {19, 20}, {17, 20}, {21, 22}, {22, 23},
          {23, 24}, {25, 26}, {26, 27}, {24, 27}, {0, 4}, {4, 21}, {21, 25}, {10, 25}, {7, 10}, {7, 18},
          {14, 18}, {0, 14}, {1, 5}, {5, 22}, {22, 26}, {11, 26}, {8, 11}, {8, 19}, {15, 19}, {1, 15},
          {2, 6}, {6, 33}, {33, 35}, {23, 35}, {23, 27}, {27, 45}, {43, 45}, {12, 43}, {9, 12}, {9, 38},
          {38, 40}, {20, 40}, {16, 20}, {16, 30}, {28, 30}, {2, 28}, {5, 33}, {1, 28}, {22, 35}, {26, 45},
          {11, 43}, {8, 38}, {19, 40}, {15, 30}, {3, 36}, {34, 36}, {34, 37}, {24, 37}, {24, 47}, {44, 47},
          {44, 46}, {13, 46}, {13, 41}, {39, 41}, {39, 42}, {17, 42}, {17, 32}, {29, 32}, {29, 31}, {3, 31},
          {33, 34}, {34, 35}, {44, 45}, {43, 44}, {38, 39}, {39, 40}, {28, 29}, {29, 30}, {6, 36}, {33, 36},
          {35, 37}, {23, 37}, {27, 47}, {45, 47}, {12, 46}, {43, 46}, {9, 41}, {38, 41}, {20, 42}, {40, 42},
          {16, 32}, {30, 32}, {2, 31}, {28, 31}}},
        {"fig9a",
         {{0, 0}, {0, 0.6}, {0, 1.2}, {0, 1.8}, {0, 2.4}, {0, -0.6},
          {0, -1.2}, {0, -1.8}, {0, -2.4}, {0.6, 0}, {1.2, 0}, {1.8, 0},
          {2.4, 0}, {-0.6, 0}, {-1.2, 0}, {-1.8, 0}, {-2.4, 0}, {0.5, 0.5},
          {0.9, 0.9}, {1.3, 1.3}, {1.7, 1.7}, {-0.5, 0.5}, {-0.9, 0.9}, {-1.3, 1.3},
          {-1.7, 1.7}, {-0.5, -0.5}, {-0.9, -0.9}, {-1.3, -1.3}, {-1.7, -1.7}, {0.5, -0.5},
          {0.9, -0.9}, {1.3, -1.3}, {1.7, -1.7}},
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 9}, {9, 10}, {10, 11}, {11, 12}, {0, 13}, {13, 14},
          {14, 15}, {15, 16}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {0, 17}, {17, 18}, {18, 19}, {19, 20},
          {0, 21}, {21, 22}, {22, 23}, {23, 24}, {0, 25}, {25, 26}, {26, 27}, {27, 28}, {0, 29}, {29, 30},
          {30, 31}, {31, 32}, {1, 21}, {13, 21}, {13, 25}, {5, 25}, {5, 29}, {9, 29}, {9, 17}, {1, 17},
          {2, 22}, {14, 22}, {14, 26}, {6, 26}, {6, 30}, {10, 30}, {10, 18}, {2, 18}, {3, 23}, {15, 23},
          {15, 27}, {7, 27}, {7, 31}, {11, 31}, {11, 19}, {3, 19}, {4, 24}, {16, 24}, {16, 28}, {8, 28},
          {8, 32}, {12, 32}, {12, 20}, {4, 20}, {4, 19}, {4, 23}, {16, 23}, {16, 27}, {8, 27}, {8, 31},
          {12, 31}, {12, 19}}},
        {"fig11a",
         {{0, 0}, {0, 3}, {-0.8, 2.3}, {-1.3, 0.7}, {-1.8, 2.5}, {-1.8, 0.2},
          {0.8, 2.3}, {1.3, 0.7}, {1.8, 2.5}, {1.8, 0.2}},
         {{0, 1}, {0, 3}, {0, 5}, {1, 4}, {1, 2}, {2, 4}, {3, 5}, {2, 3}, {4, 5}, {0, 7},
          {0, 9}, {1, 8}, {1, 6}, {6, 8}, {7, 9}, {6, 7}, {8, 9}}},
        {"fig11b",
         {{0, 0}, {0, 3}, {-1, 2.3}, {-1, 0.7}, {-1.8, 2.5}, {-1.8, 0.2},
          {1, 2.3}, {1, 0.7}, {1.8, 2.5}, {1.8, 0.2}},
         {{0, 1}, {0, 3}, {0, 5}, {1, 4}, {1, 2}, {2, 4}, {3, 5}, {2, 3}, {4, 5}, {0, 7},
          {0, 9}, {1, 8}, {1, 6}, {6, 8}, {7, 9}, {6, 7}, {8, 9}}},
        {"fig12a",
         {{-1, 0}, {1, 0}, {-1, -2}, {1, -2}, {3, 0}, {3, -2},
          {5, 0}, {5, -2}, {-1, -4}, {1, -4}, {3, -4}, {5, -4},
          {-1, -6}, {1, -6}, {3, -6}, {5, -6}},
         {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 5}, {4, 6}, {5, 7}, {4, 5}, {6, 7},
          {2, 8}, {3, 9}, {8, 9}, {9, 10}, {10, 11}, {5, 10}, {7, 11}, {8, 12}, {9, 13}, {12, 13},
          {13, 14}, {14, 15}, {10, 14}, {11, 15}}},
        {"fig12b",
         {{-0.5, -0.5}, {0.5, -0.5}, {-0.5, -1.5}, {0.5, -1.5}, {-1, 0}, {1, 0},
          {-1, -2}, {1, -2}, {3, 0}, {3, -2}, {5, 0}, {5, -2},
          {1.5, -0.5}, {2.5, -0.5}, {1.5, -1.5}, {2.5, -1.5}, {3.5, -0.5}, {4.5, -0.5},
          {3.5, -1.5}, {4.5, -1.5}, {-0.5, -2.5}, {0.5, -2.5}, {-0.5, -3.5}, {0.5, -3.5},
          {-1, -4}, {1, -4}, {3, -4}, {5, -4}, {1.5, -2.5}, {2.5, -2.5},
          {1.5, -3.5}, {2.5, -3.5}, {3.5, -2.5}, {4.5, -2.5}, {3.5, -3.5}, {4.5, -3.5},
          {-0.5, -4.5}, {0.5, -4.5}, {-0.5, -5.5}, {0.5, -5.5}, {-1, -6}, {1, -6},
          {3, -6}, {5, -6}, {1.5, -4.5}, {2.5, -4.5}, {1.5, -5.5}, {2.5, -5.5},
          {3.5, -4.5}, {4.5, -4.5}, {3.5, -5.5}, {4.5, -5.5}},
         {{12, 13}, {12, 14}, {13, 15}, {14, 15}, {5, 12}, {7, 14}, {8, 13}, {9, 15}, {16, 17}, {16, 18},
          {17, 19}, {18, 19}, {8, 16}, {9, 18}, {10, 17}, {11, 19}, {0, 1}, {0, 2}, {1, 3}, {2, 3},
          {4, 5}, {4, 6}, {5, 7}, {6, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {5, 8}, {7, 9},
          {8, 10}, {9, 11}, {8, 9}, {10, 11}, {28, 29}, {28, 30}, {29, 31}, {30, 31}, {7, 28}, {25, 30},
          {9, 29}, {26, 31}, {32, 33}, {32, 34}, {33, 35}, {34, 35}, {9, 32}, {26, 34}, {11, 33}, {27, 35},
          {20, 21}, {20, 22}, {21, 23}, {22, 23}, {6, 24}, {7, 25}, {24, 25}, {6, 20}, {7, 21}, {22, 24},
          {23, 25}, {25, 26}, {26, 27}, {9, 26}, {11, 27}, {44, 45}, {44, 46}, {45, 47}, {46, 47}, {25, 44},
          {41, 46}, {26, 45}, {42, 47}, {48, 49}, {48, 50}, {49, 51}, {50, 51}, {26, 48}, {42, 50}, {27, 49},
          {43, 51}, {36, 37}, {36, 38}, {37, 39}, {38, 39}, {24, 40}, {25, 41}, {40, 41}, {24, 36}, {25, 37},
          {38, 40}, {39, 41}, {41, 42}, {42, 43}, {26, 42}, {27, 43}}},
    };
    return figures;
}

}  // namespace symstress::detail
