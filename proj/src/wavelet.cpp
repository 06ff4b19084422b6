#include "psi/wavelet.hpp"

#include <cmath>

namespace psi {

namespace {

// Discrete Meyer lowpass approximation, 102 taps, linear phase. Generated by
// tools/gen_dmey_table.cpp: frequency sampling of the analytic Meyer response
// followed by a Gauss-Newton projection onto the even-lag autocorrelation
// conditions, so periodic analysis/synthesis reconstructs below 1e-10.
const double kDmeyLo[102] = {
    +1.02296923894392437e-08,    -5.81044217412394459e-08,    +1.49462389091349301e-07,
    -2.65542291765460002e-07,    +4.07821563771155326e-07,    -4.92539921395788340e-07,
    +3.78220026661654966e-07,    -2.18515639311869653e-07,    +1.31013599686700502e-07,
    +3.07957926772735406e-07,    -7.88072489042760835e-07,    +7.25770027962949153e-08,
    +8.92768960455671226e-07,    +3.02627593869171630e-08,    -8.88291291761451908e-07,
    -9.19604273479530224e-07,    +1.82617452559469845e-06,    +1.43184312143996589e-06,
    -4.37687601276386044e-06,    +1.23688153370487498e-06,    +6.90799104592349990e-06,
    -9.43038141985774198e-06,    -3.65812787007928975e-06,    +1.90846305596795599e-05,
    -1.27909289542480549e-05,    -1.36085953369961663e-05,    +4.12428969983929985e-05,
    -2.95791102874410306e-05,    -6.25475155131899118e-05,    +1.05919094731800936e-04,
    +6.18890416871237541e-05,    -1.35028164842977276e-04,    -1.19645026262480482e-04,
    -4.42372368217682811e-05,    +5.61181775222496988e-04,    +5.57610802950094051e-04,
    -2.06917271598752034e-03,    -1.26146258226269886e-03,    +5.65105953177351406e-03,
    +1.52002869501941646e-03,    -1.25299411095149155e-02,    -5.01530849545747123e-05,
    +2.42193694675342797e-02,    -5.47203681398462059e-03,    -4.29872627140040833e-02,
    +1.95897447137742438e-02,    +7.41205239474798661e-02,    -5.43049510193281404e-02,
    -1.41098289112736974e-01,    +1.80551481775461820e-01,    +6.60305663394738174e-01,
    +6.60305663394738174e-01,    +1.80551481775461820e-01,    -1.41098289112736974e-01,
    -5.43049510193281404e-02,    +7.41205239474798661e-02,    +1.95897447137742438e-02,
    -4.29872627140040833e-02,    -5.47203681398462059e-03,    +2.42193694675342797e-02,
    -5.01530849545747123e-05,    -1.25299411095149155e-02,    +1.52002869501941646e-03,
    +5.65105953177351406e-03,    -1.26146258226269886e-03,    -2.06917271598752034e-03,
    +5.57610802950094051e-04,    +5.61181775222496988e-04,    -4.42372368217682811e-05,
    -1.19645026262480482e-04,    -1.35028164842977276e-04,    +6.18890416871237541e-05,
    +1.05919094731800936e-04,    -6.25475155131899118e-05,    -2.95791102874410306e-05,
    +4.12428969983929985e-05,    -1.36085953369961663e-05,    -1.27909289542480549e-05,
    +1.90846305596795599e-05,    -3.65812787007928975e-06,    -9.43038141985774198e-06,
    +6.90799104592349990e-06,    +1.23688153370487498e-06,    -4.37687601276386044e-06,
    +1.43184312143996589e-06,    +1.82617452559469845e-06,    -9.19604273479530224e-07,
    -8.88291291761451908e-07,    +3.02627593869171630e-08,    +8.92768960455671226e-07,
    +7.25770027962949153e-08,    -7.88072489042760835e-07,    +3.07957926772735406e-07,
    +1.31013599686700502e-07,    -2.18515639311869653e-07,    +3.78220026661654966e-07,
    -4.92539921395788340e-07,    +4.07821563771155326e-07,    -2.65542291765460002e-07,
    +1.49462389091349301e-07,    -5.81044217412394459e-08,    +1.02296923894392437e-08,
};

Eigen::ArrayXd quadrature_mirror(const Eigen::ArrayXd& lo) {
    const int m = static_cast<int>(lo.size());
    Eigen::ArrayXd hi(m);
    for (int i = 0; i < m; ++i) hi[i] = (i % 2 ? -1.0 : 1.0) * lo[m - 1 - i];
    return hi;
}

WaveletFilter from_lowpass(std::string name, Eigen::ArrayXd lo) {
    WaveletFilter f;
    f.name = std::move(name);
    f.dec_lo = std::move(lo);
    f.dec_hi = quadrature_mirror(f.dec_lo);
    f.rec_lo = f.dec_lo.reverse();
    f.rec_hi = f.dec_hi.reverse();
    f.offset = f.length() / 2 - 1;
    return f;
}

}  // namespace

WaveletFilter make_filter(const std::string& name) {
    if (name == "db2") {
        const double s3 = std::sqrt(3.0);
        const double norm = 4.0 * std::sqrt(2.0);
        Eigen::ArrayXd lo(4);
        lo << (1.0 + s3) / norm, (3.0 + s3) / norm, (3.0 - s3) / norm, (1.0 - s3) / norm;
        return from_lowpass("db2", std::move(lo));
    }
    if (name == "dmey") {
        Eigen::ArrayXd lo = Eigen::Map<const Eigen::ArrayXd>(kDmeyLo, 102);
        return from_lowpass("dmey", std::move(lo));
    }
    throw std::invalid_argument("make_filter: unknown wavelet '" + name +
                                "' (supported: db2, dmey)");
}

}  // namespace psi
