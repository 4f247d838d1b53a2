// Copyright 2026 The k3inst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "golden_data.h"

namespace k3inst::internal {

// Tables 1 and 2 of the classification as printed: label, weights, degree d,
// complex moduli dimension, singularities, deg(connection). Printed typos are
// kept; disagreements surface through diff().
const std::array<PrintedRow, 95> kPrintedRows = {{
    {1, {1, 1, 1, 1}, 4, 90, "no singularities", "0"},
    {2, {1, 1, 1, 3}, 6, 90, "no singularities", "0"},
    {3, {1, 1, 1, 2}, 5, 84, "A_1", "3/2"},
    {4, {1, 1, 4, 6}, 12, 84, "A_1", "3/2"},
    {5, {1, 1, 2, 4}, 8, 78, "2xA_1", "3"},
    {6, {1, 1, 3, 5}, 10, 80, "A_2", "8/3"},
    {7, {1, 1, 2, 2}, 6, 72, "3xA_1", "9/2"},
    {8, {1, 1, 2, 3}, 7, 74, "A_1, A_2", "25/6"},
    {9, {1, 1, 3, 4}, 9, 76, "A_3", "15/4"},
    {10, {1, 2, 2, 5}, 10, 60, "5xA_1", "15/2"},
    {11, {1, 2, 6, 9}, 18, 62, "3xA_1, A_2", "43/6"},
    {12, {1, 2, 2, 3}, 8, 56, "4xA_1, A_2", "26/3"},
    {13, {1, 2, 3, 6}, 12, 58, "2xA_1, 2xA_2", "25/3"},
    {14, {1, 2, 4, 7}, 14, 58, "3xA_1, A_3", "33/4"},
    {15, {1, 2, 5, 8}, 16, 60, "2xA_1, A_4", "39/5"},
    {16, {1, 2, 3, 3}, 9, 54, "A_1, 3xA_2", "19/2"},
    {17, {1, 2, 3, 4}, 10, 54, "2xA_1, A_2, A_3", "113/12"},
    {18, {1, 2, 3, 5}, 11, 56, "A_1, A_2, A_4", "269/30"},
    {19, {1, 2, 4, 5}, 12, 54, "3xA_1, A_4", "93/10"},
    {20, {1, 2, 5, 7}, 15, 58, "A_1, A_6", "117/14"},
    {21, {1, 3, 8, 12}, 24, 56, "2xA_2, A_3", "109/12"},
    {22, {1, 3, 4, 8}, 16, 52, "A_2, 2xA_3", "61/6"},
    {23, {1, 3, 5, 9}, 18, 52, "2xA_2, A_4", "152/15"},
    {24, {1, 3, 7, 11}, 22, 54, "A_2, A_6", "200/21"},
    {25, {1, 4, 10, 15}, 30, 52, "A_3, A_1, A_4", "201/20"},
    {26, {1, 3, 4, 4}, 12, 48, "3xA_3", "45/4"},
    {27, {1, 3, 4, 5}, 13, 48, "A_2, A_3, A_4", "673/60"},
    {28, {2, 2, 3, 7}, 14, 38, "7xA_1, A_2", "79/6"},
    {29, {1, 3, 4, 7}, 15, 50, "A_3, A_6", "297/28"},
    {30, {1, 3, 5, 6}, 15, 48, "2xA_2, A_5", "67/6"},
    {31, {1, 4, 5, 10}, 20, 48, "A_1, 2xA_4", "110/10"},
    {32, {1, 3, 7, 10}, 21, 52, "A_9", "99/10"},
    {33, {1, 4, 6, 11}, 22, 48, "A_3, A_1, A_5", "133/12"},
    {34, {1, 4, 9, 14}, 28, 50, "A_1, A_8", "187/18"},
    {35, {1, 5, 12, 18}, 36, 50, "A_4, A_5", "319/30"},
    {36, {1, 6, 14, 21}, 42, 48, "A_1, A_2, A_6", "463/42"},
    {37, {2, 2, 3, 5}, 12, 36, "6xA_1, A_4", "69/5"},
    {38, {1, 4, 5, 6}, 16, 44, "A_1, A_4, A_5", "182/15"},
    {39, {1, 4, 6, 7}, 18, 44, "A_3, A_1, A_6", "339/28"},
    {40, {1, 5, 7, 13}, 26, 46, "A_4, A_6", "408/35"},
    {41, {1, 6, 8, 15}, 30, 44, "A_1, A_2, A_7", "289/24"},
    {42, {2, 3, 3, 4}, 12, 32, "3xA_1, 4xA_2", "91/6"},
    {43, {2, 3, 4, 9}, 18, 32, "4xA_1, 2xA_2, A_3", "181/12"},
    {44, {1, 5, 7, 8}, 21, 42, "A_4, A_7", "507/40"},
    {45, {1, 6, 8, 9}, 24, 40, "A_1, A_2, A_8", "235/18"},
    {46, {2, 3, 10, 15}, 30, 34, "3xA_1, 2xA_2, A_4", "439/30"},
    {47, {2, 3, 4, 5}, 14, 30, "3xA_1, A_2, A_3, A_4", "943/60"},
    {48, {2, 3, 4, 7}, 16, 30, "4xA_1, A_2, A_6", "326/21"},
    {49, {2, 3, 5, 10}, 20, 32, "2xA_1, A_2, 2xA_4", "229/15"},
    {50, {2, 4, 5, 11}, 22, 28, "5xA_1, A_3, A_4", "321/20"},
    {51, {2, 3, 7, 12}, 24, 32, "2xA_1, 2xA_2, A_6", "319/21"},
    {52, {2, 3, 8, 13}, 26, 32, "3xA_1, A_2, A_7", "361/24"},
    {53, {2, 3, 5, 5}, 15, 30, "A_1, 3xA_4", "159/10"},
    {54, {3, 3, 4, 5}, 15, 26, "5xA_2, A_3", "205/12"},
    {55, {2, 3, 5, 7}, 17, 30, "A_1, A_2, A_4, A_6", "3323/210"},
    {56, {2, 3, 5, 8}, 18, 30, "2xA_1, A_4, A_7", "627/40"},
    {57, {2, 4, 5, 9}, 20, 26, "5xA_1, A_8", "295/18"},
    {58, {2, 3, 7, 9}, 21, 30, "A_1, 2xA_2, A_8", "283/18"},
    {59, {2, 3, 8, 11}, 24, 30, "3xA_1, A_10", "339/22"},
    {60, {2, 5, 6, 13}, 26, 26, "4xA_1, A_4, A_5", "499/30"},
    {61, {2, 6, 7, 15}, 30, 24, "5xA_1, A_2, A_6", "715/42"},
    {62, {3, 4, 5, 6}, 18, 22, "3xA_2, A_3, A_1, A_4", "361/20"},
    {63, {2, 5, 6, 7}, 20, 24, "3xA_1, A_5, A_6", "361/21"},
    {64, {3, 4, 5, 12}, 24, 32, "2xA_1, 2xA_3, A_4", "153/10"},
    {65, {2, 5, 9, 16}, 32, 26, "2xA_1, A_4, A_8", "751/45"},
    {66, {3, 4, 14, 21}, 42, 24, "2xA_2, A_3, A_1, A_6", "1465/84"},
    {67, {3, 4, 5, 7}, 19, 22, "A_2, A_3, A_4, A_6", "7591/420"},
    {68, {3, 4, 5, 8}, 20, 22, "A_2, 2xA_3, A_7", "433/24"},
    {69, {3, 5, 6, 7}, 21, 20, "3xA_2, A_4, A_5", "559/30"},
    {70, {2, 5, 9, 11}, 27, 24, "A_1, A_4, A_10", "1893/110"},
    {71, {3, 4, 7, 14}, 28, 22, "A_2, A_1, 2xA_6", "751/42"},
    {72, {4, 5, 6, 15}, 30, 18, "A_3, 2xA_1, 2xA_4, A_2", "1141/60"},
    {73, {3, 4, 10, 17}, 34, 22, "A_2, A_3, A_1, A_9", "1069/60"},
    {74, {3, 4, 11, 18}, 36, 22, "2xA_2, A_1, A_10", "1171/66"},
    {75, {3, 5, 16, 24}, 48, 22, "2xA_2, A_4, A_7", "2161/120"},
    {76, {3, 4, 7, 10}, 24, 20, "A_1, A_6, A_9", "639/35"},
    {77, {4, 5, 6, 9}, 24, 16, "2xA_1, A_4, A_2, A_8", "871/45"},
    {78, {3, 4, 10, 13}, 30, 20, "A_3, A_1, A_12", "945/52"},
    {79, {4, 5, 7, 16}, 32, 0, "2xA_3, 2xA_4, A_6", "1677/70"},
    {80, {4, 6, 7, 17}, 34, 16, "A_3, 2xA_1, A_5, A_6", "1633/84"},
    {81, {3, 5, 11, 19}, 38, 20, "A_2, A_4, A_10", "3032/165"},
    {82, {4, 5, 18, 27}, 54, 18, "A_3, A_1, A_4, A_8", "3409/180"},
    {83, {4, 5, 7, 9}, 25, 16, "A_3, A_6, A_8", "4913/252"},
    {84, {5, 6, 7, 9}, 27, 14, "A_4, A_5, A_2, A_6", "1411/210"},
    {85, {4, 6, 7, 11}, 28, 14, "2xA_1, A_5, A_10", "1303/66"},
    {86, {3, 5, 11, 14}, 33, 18, "A_4, A_13", "1311/70"},
    {87, {5, 6, 8, 19}, 38, 14, "A_4, A_5, A_1, A_7", "2401/120"},
    {88, {5, 7, 8, 20}, 40, 14, "2xA_4, A_6, A_3", "2829/140"},
    {89, {2, 5, 14, 21}, 42, 28, "3xA_1, A_4, A_6", "1131/70"},
    {90, {4, 5, 13, 22}, 44, 16, "A_1, A_4, A_12", "2499/130"},
    {91, {5, 6, 22, 33}, 66, 14, "A_4, A_1, A_2, A_10", "6559/330"},
    {92, {3, 6, 7, 8}, 24, 18, "4xA_2, A_1, A_6", "799/42"},
    {93, {5, 6, 8, 11}, 30, 12, "A_1, A_7, A_10", "1785/88"},
    {94, {7, 8, 9, 12}, 36, 10, "A_6, A_7, A_3, A_2", "3553/168"},
    {95, {7, 8, 10, 25}, 50, 10, "A_6, A_7, A_1, A_4", "5889/280"},
}};

}  // namespace k3inst::internal
