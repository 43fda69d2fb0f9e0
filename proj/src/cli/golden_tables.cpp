#include <picard/golden.hpp>

namespace picard {

// Coefficient tables transcribed from the printed expansions. Each block
// names the display it was copied from.
const std::string& golden_tables_text()
{
    static const std::string text = R"(
# cubic family: q(z) = z + 15 z^2 + ...
[s3.q_of_z]
source = mirror 3 q_of_z
valuation = 1
coeffs = 1 15 279 5729 124554 2810718 65114402

# cubic family: inverse mirror map z(q) = q - 15 q^2 + ...
[s3.z_of_q]
source = mirror 3 z_of_q
valuation = 1
coeffs = 1 -15 171 -1679 15054 -126981 1024952

# cubic family: pulled-back solution "1 + 6q + 6q^3 + 6q^4 + 12q^7 + ..."
[s3.f0_tilde]
source = mirror 3 f0_tilde
valuation = 0
coeffs = 1 6 0 6 6 0 0 12 0 6 0 0 6 12 0 0 6 0 0 12 0

# quartic family: q(z) = z + 104 z^2 + ...
[s4.q_of_z]
source = mirror 4 q_of_z
valuation = 1
coeffs = 1 104 15188 2585184 480222434 94395247376

# quartic family: z(q) = q - 104 q^2 + ...
[s4.z_of_q]
source = mirror 4 z_of_q
valuation = 1
coeffs = 1 -104 6444 -311744 13018830 -493025760

# quartic family: pulled-back solution "1 + 24q + 24q^2 + 96q^3 + ..."
[s4.f0_tilde]
source = mirror 4 f0_tilde
valuation = 0
coeffs = 1 24 24 96 24 144 96 192 24

# quintic mirror map "z = q - 770 q^2 + 171525 q^3 - ..."
[s5.z_of_q]
source = mirror 5 z_of_q
valuation = 1
coeffs = 1 -770 171525 -81623000 -35423171250 -54572818340154 -71982448083391590 -102693620674349200800

# quintic pulled-back solution "1 + 120 q + 21000 q^2 + ..."
[s5.f0_tilde]
source = mirror 5 f0_tilde
valuation = 0
coeffs = 1 120 21000 14115000 13414125000 15234972675120 19285869813670920 26264963911492602000

# quintic analytic parts of the Frobenius basis, "g0 = 1 + 120 z + ..."
[s5.g0]
source = analytic 5 0
valuation = 0
coeffs = 1 120 113400 168168000 305540235000

# "g1 = 770 z + 810225 z^2 + ..."
[s5.g1]
source = analytic 5 1
valuation = 1
coeffs = 770 810225 3745679000/3 4627120640625/2

# "g2 = 575 z + ..."
[s5.g2]
source = analytic 5 2
valuation = 1
coeffs = 575 4208175/4 16964522000/9 180021646778125/48

# "g3 = -1150 z - ..."
[s5.g3]
source = analytic 5 3
valuation = 1
coeffs = -1150 -3298375/4 -46661619875/54 -325329574909375/288

# Yukawa coupling "K = 5 + 2875 q + 4876875 q^2 + ..."
[yukawa.K]
source = yukawa
valuation = 0
coeffs = 5 2875 4876875 8564575000 15517926796875

# number of lines, n_1 = 2875
[yukawa.n]
source = instantons
valuation = 1
coeffs = 2875
)";
    return text;
}

} // namespace picard
