#include "dirac/channel.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace dirac {

namespace {

constexpr std::string_view ell_letters = "spdfgh";

int parse_int(std::string_view text, std::string_view whole) {
    int value = 0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw std::invalid_argument("malformed state label '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Channel::Channel(int tau, int two_j, int n) : tau_(tau), two_j_(two_j), n_(n) {
    if (tau != -1 && tau != 1) {
        throw std::invalid_argument("tau must be +1 or -1, got " + std::to_string(tau));
    }
    if (two_j < 1 || two_j % 2 == 0) {
        throw std::invalid_argument("2j must be a positive odd integer, got " + std::to_string(two_j));
    }
    if (n < 1) {
        throw std::invalid_argument("radial index n must be >= 1, got " + std::to_string(n));
    }
}

Channel Channel::from_label(std::string_view label) {
    // <nu><letter>[_]<2j>/2
    std::size_t pos = 0;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
        ++pos;
    }
    if (pos == 0 || pos >= label.size()) {
        throw std::invalid_argument("malformed state label '" + std::string(label) + "'");
    }
    int const nu = parse_int(label.substr(0, pos), label);
    auto const letter = static_cast<char>(std::tolower(static_cast<unsigned char>(label[pos])));
    auto const ell_pos = ell_letters.find(letter);
    if (ell_pos == std::string_view::npos) {
        throw std::invalid_argument("unknown orbital letter in '" + std::string(label) + "'");
    }
    int const ell = static_cast<int>(ell_pos);
    ++pos;
    if (pos < label.size() && label[pos] == '_') {
        ++pos;
    }
    auto const rest = label.substr(pos);
    auto const slash = rest.find('/');
    if (slash == std::string_view::npos || rest.substr(slash + 1) != "2") {
        throw std::invalid_argument("j must be written as <2j>/2 in '" + std::string(label) + "'");
    }
    int const two_j = parse_int(rest.substr(0, slash), label);

    int tau = 0;
    if (2 * ell == two_j - 1) {
        tau = -1;
    } else if (2 * ell == two_j + 1) {
        tau = 1;
    } else {
        throw std::invalid_argument("l and j are incompatible in '" + std::string(label) + "'");
    }
    int const k = (two_j + 1) / 2;
    int const n = nu - k + (1 - tau) / 2;
    if (n < 1) {
        throw std::invalid_argument("principal quantum number too small in '" + std::string(label) + "'");
    }
    return Channel(tau, two_j, n);
}

int principal_quantum_number(Channel const& ch) noexcept {
    return ch.n() + ch.k() - (1 - ch.tau()) / 2;
}

int parity(Channel const& ch) noexcept {
    // j + tau/2 = (2j + tau)/2 is an integer
    int const exponent = (ch.two_j() + ch.tau()) / 2;
    return exponent % 2 == 0 ? 1 : -1;
}

std::string spectroscopic_label(Channel const& ch) {
    int const ell = ch.ell();
    if (ell < 0 || ell >= static_cast<int>(ell_letters.size())) {
        throw std::out_of_range("no spectroscopic letter for l = " + std::to_string(ell) +
                                " (supported: s p d f g h)");
    }
    return std::to_string(principal_quantum_number(ch)) + ell_letters[static_cast<std::size_t>(ell)] + "_" +
           std::to_string(ch.two_j()) + "/2";
}

void PhysicalConstants::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("fine-structure constant must lie in (0, 1)");
    }
    if (!(electron_rest_energy_keV > 0.0)) {
        throw std::invalid_argument("electron rest energy must be positive");
    }
}

double to_binding_keV(double energy_mc2, PhysicalConstants const& constants) {
    return (energy_mc2 - 1.0) * constants.electron_rest_energy_keV;
}

double from_binding_keV(double binding_keV, PhysicalConstants const& constants) {
    return 1.0 + binding_keV / constants.electron_rest_energy_keV;
}

double convert_energy(double energy_mc2, EnergyUnits units, PhysicalConstants const& constants) {
    return units == EnergyUnits::mc2 ? energy_mc2 : to_binding_keV(energy_mc2, constants);
}

} // namespace dirac
