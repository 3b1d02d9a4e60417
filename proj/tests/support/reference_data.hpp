#pragma once

// Reference values for the eleven design points 2.0, 2.1, ..., 3.0 dB (the
// 3.0 row is the t1 = 0 optimum, whose true SQNR is 10*log10(2) = 3.0103 dB).
//
// kPublishedRows carries the 4-decimal legacy reference table this project
// reproduces. kAnalyticRows carries the same quantities computed
// independently to high precision (50-digit arithmetic, mpmath findroot +
// a separate heap-based Huffman), for cross-implementation checks.

#include <array>

namespace refdata {

struct Row {
    double sqnr_db;
    double distortion;
    double t1;
    double p1;
    double p2;
    double entropy; // per symbol
    std::array<double, 4> rate; // per symbol, block sizes 2, 3, 4, 5
};

inline constexpr std::array<Row, 11> kPublishedRows{{
    {2.0, 0.6309, 1.1876, 0.9067, 0.0932, 0.4471, {0.6353, 0.5191, 0.4749, 0.4612}},
    {2.1, 0.6165, 1.1096, 0.8958, 0.1041, 0.4819, {0.6506, 0.5406, 0.5030, 0.4918}},
    {2.2, 0.6025, 1.0324, 0.8838, 0.1161, 0.5181, {0.6673, 0.5643, 0.5343, 0.5256}},
    {2.3, 0.5888, 0.9546, 0.8703, 0.1296, 0.5564, {0.6859, 0.5909, 0.5697, 0.5616}},
    {2.4, 0.5754, 0.8756, 0.8550, 0.1449, 0.5970, {0.7067, 0.6209, 0.6073, 0.6017}},
    {2.5, 0.5623, 0.7943, 0.8373, 0.1626, 0.6405, {0.7306, 0.6555, 0.6504, 0.6475}},
    {2.6, 0.5495, 0.7091, 0.8165, 0.1834, 0.6878, {0.7582, 0.6958, 0.7008, 0.7009}},
    {2.7, 0.5370, 0.6176, 0.7912, 0.2087, 0.7390, {0.7911, 0.7445, 0.7588, 0.7542}},
    {2.8, 0.5248, 0.5147, 0.7585, 0.2414, 0.7974, {0.8328, 0.8066, 0.8056, 0.8075}},
    {2.9, 0.5128, 0.3866, 0.7105, 0.2894, 0.8680, {0.8921, 0.8958, 0.8758, 0.8796}},
    {3.0, 0.5000, 0.0, 0.5, 0.5, 1.0, {1.0, 1.0, 1.0, 1.0}},
}};

inline constexpr std::array<Row, 11> kAnalyticRows{{
    {2.0, 0.63095734448, 1.18794193731, 0.906813347365, 0.0931866526347, 0.447017943026,
     {0.635438102837, 0.519167165401, 0.475052152157, 0.461080253151}},
    {2.1, 0.616595001861, 1.11020144316, 0.895983851561, 0.104016148439, 0.481598713625,
     {0.650614543091, 0.540615371501, 0.502920111362, 0.491462987656}},
    {2.2, 0.602559586074, 1.03275444826, 0.883944009533, 0.116055990467, 0.517916652353,
     {0.667349489239, 0.564403209391, 0.534246777997, 0.525256772278}},
    {2.3, 0.588843655356, 0.954934912715, 0.870442319184, 0.129557680816, 0.556223873964,
     {0.685943924894, 0.590998927876, 0.569779411916, 0.561217568487}},
    {2.4, 0.575439937337, 0.875923826437, 0.855125950115, 0.144874049885, 0.596862536819,
     {0.706816829663, 0.621054308041, 0.607477915666, 0.601124980587}},
    {2.5, 0.56234132519, 0.79463182356, 0.837475461512, 0.162524538488, 0.640314989951,
     {0.730579694927, 0.655520437092, 0.650432174117, 0.646597081134}},
    {2.6, 0.549540873858, 0.709471358088, 0.816674349613, 0.183325650387, 0.687298533659,
     {0.758184328535, 0.695877125859, 0.700887609322, 0.699437995475}},
    {2.7, 0.53703179637, 0.617847959299, 0.791312245987, 0.208687754013, 0.738966931005,
     {0.791256341682, 0.744649859726, 0.75905712169, 0.752303431692}},
    {2.8, 0.52480746025, 0.514771384809, 0.758562310694, 0.241437689306, 0.797422943243,
     {0.83301045505, 0.806826096019, 0.805945547059, 0.805120311975}},
    {2.9, 0.512861383991, 0.387471987996, 0.710938358441, 0.289061641559, 0.867506019929,
     {0.891814146028, 0.895354604858, 0.875619665487, 0.874792373483}},
    {3.0, 0.5, 0.0, 0.5, 0.5, 1.0, {1.0, 1.0, 1.0, 1.0}},
}};

} // namespace refdata
