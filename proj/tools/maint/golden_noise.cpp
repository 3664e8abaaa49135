// Writes the reference noise files checked by the unit tests:
//   ar2_golden_noise <dir>
// produces golden_noise_seed{0,1,42}.csv with the first 64 draws.

#include <fstream>
#include <iostream>
#include <string>

#include "ar2/noise.hpp"
#include "cli/output.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: ar2_golden_noise <dir>\n";
        return 2;
    }
    for (const std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        const std::string path = std::string(argv[1]) + "/golden_noise_seed" + std::to_string(seed) + ".csv";
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << path << '\n';
            return 1;
        }
        out << "# algorithm: " << ar2::noise::algorithm_id << '\n' << "index,value\n";
        for (std::uint64_t i = 0; i < 64; ++i) {
            out << i << ',' << ar2::cli::format_double(ar2::noise::standard_normal_at(seed, i), 17) << '\n';
        }
    }
    return 0;
}
