#pragma once

// Generated by compute_oracles.py; do not edit.

namespace oracle {

inline constexpr double log_ram_sason_r1p5_m2 = -0.10067756775344437;
inline constexpr double uniform_gap_r1p5_m2 = -0.10067756775344437;
inline constexpr double log_ram_sason_r1p5_m3 = -0.13133406903473888;
inline constexpr double uniform_gap_r1p5_m3 = -0.13133406903473888;
inline constexpr double log_ram_sason_r2_m2 = -0.16989903679539747;
inline constexpr double uniform_gap_r2_m2 = -0.16989903679539747;
inline constexpr double log_ram_sason_r2_m3 = -0.2184606034098278;
inline constexpr double uniform_gap_r2_m3 = -0.2184606034098278;
inline constexpr double log_ram_sason_r4_m2 = -0.32124126170292905;
inline constexpr double uniform_gap_r4_m2 = -0.32124126170292905;
inline constexpr double log_ram_sason_r4_m3 = -0.4009480969820459;
inline constexpr double uniform_gap_r4_m3 = -0.4009480969820459;
inline constexpr double bobkov_chistyakov_r2 = 0.7357588823428847;
inline constexpr double bobkov_chistyakov_r3 = 0.637185883168984;
inline constexpr double gap_over_entropy_r1p5_m2 = -0.14524702772665682;
inline constexpr double gap_over_entropy_r2_m2 = -0.2451124978365314;
inline constexpr double gap_over_entropy_r4_m2 = -0.4634531751877294;
inline constexpr double li_alpha_r2 = 1.3247006966389716;
inline constexpr double h_normal_s0p25_p0p5 = 0.9189385332046728;
inline constexpr double h_normal_s0p25_p2 = 0.5723649429247001;
inline constexpr double h_normal_s0p25_p3 = 0.5004444248117549;
inline constexpr double h_normal_s0p25_p10 = 0.3537127466999522;
inline constexpr double h_normal_s1_p0p5 = 1.612085713764618;
inline constexpr double h_normal_s1_p2 = 1.2655121234846454;
inline constexpr double h_normal_s1_p3 = 1.1935916053717002;
inline constexpr double h_normal_s1_p10 = 1.0468599272598975;
inline constexpr double h_normal_s4_p0p5 = 2.3052328943245635;
inline constexpr double h_normal_s4_p2 = 1.9586593040445908;
inline constexpr double h_normal_s4_p3 = 1.8867387859316456;
inline constexpr double h_normal_s4_p10 = 1.740007107819843;
inline constexpr double h_exp_p0p5 = 1.3862943611198906;
inline constexpr double h_laplace_p0p5 = 2.0794415416798357;
inline constexpr double h_triangle_p0p5 = 0.5753641449035618;
inline constexpr double h_gamma2_p0p5 = 1.8378770664093456;
inline constexpr double h_exp_p2 = 0.6931471805599453;
inline constexpr double h_laplace_p2 = 1.3862943611198906;
inline constexpr double h_triangle_p2 = 0.4054651081081644;
inline constexpr double h_gamma2_p2 = 1.3862943611198906;
inline constexpr double h_exp_p3 = 0.5493061443340549;
inline constexpr double h_laplace_p3 = 1.2424533248940002;
inline constexpr double h_triangle_p3 = 0.34657359027997264;
inline constexpr double h_gamma2_p3 = 1.3013448427221919;
inline constexpr double h2_normal1 = 1.2655121234846454;
inline constexpr double h_normal_plus_laplace_p0p5 = 2.248814279878406;
inline constexpr double h_normal_plus_laplace_p2 = 1.7418333919669524;
inline constexpr double kl_escort_normal_p0p5 = 0.15342640972002736;
inline constexpr double kl_escort_exp_p0p5 = 0.3068528194400547;
inline constexpr double kl_escort_laplace_p0p5 = 0.3068528194400547;
inline constexpr double kl_escort_normal_p2 = 0.09657359027997266;
inline constexpr double kl_escort_exp_p2 = 0.19314718055994531;
inline constexpr double kl_escort_laplace_p2 = 0.19314718055994531;
inline constexpr double kl_escort_normal_p3 = 0.21597281100072152;
inline constexpr double kl_escort_exp_p3 = 0.43194562200144304;
inline constexpr double kl_escort_laplace_p3 = 0.43194562200144304;
inline constexpr double kl_normal_half_vs_one = 0.09657359027997266;
inline constexpr double info_lhs_exp_normal1_p2 = 1.473419667221769;
inline constexpr double info_lhs_normal1_laplace3_p0p5 = 2.0793131144224426;
inline constexpr double varentropy_gamma2_p0p5 = 2.9348022005446794;
inline constexpr double varentropy_gamma2_p2 = 0.14493406684822643;
inline constexpr double transport_exp_at_m1 = 0.17275377902344988;
inline constexpr double transport_exp_at_0 = 0.6931471805599453;
inline constexpr double transport_exp_at_1 = 1.8410216450092636;
inline constexpr double transport_exp_at_2 = 3.783184333682032;

}  // namespace oracle
