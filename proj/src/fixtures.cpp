#include "hitkernel/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef HITKERNEL_FIXTURE_DIR
#define HITKERNEL_FIXTURE_DIR "fixtures"
#endif

namespace hk::fixtures {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(const std::string& payload) {
    std::ostringstream os;
    os << std::hex << fnv1a(payload);
    return os.str();
}

std::string default_dir() {
    if (const char* env = std::getenv("HITKERNEL_FIXTURES")) return env;
    return HITKERNEL_FIXTURE_DIR;
}

namespace {

json load_checked(const std::string& dir, const std::string& name) {
    const std::string path = dir + "/" + name + ".json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixture not found: " + path);
    json j = json::parse(in);
    if (!j.contains("hash")) throw std::runtime_error("fixture missing hash: " + path);
    std::string expect = j.at("hash").get<std::string>();
    json payload = j;
    payload.erase("hash");
    if (hash_hex(payload.dump()) != expect)
        throw std::runtime_error("fixture hash mismatch: " + path);
    return j;
}

std::vector<std::uint32_t> to_u32(const json& arr) {
    std::vector<std::uint32_t> v;
    for (const auto& x : arr) v.push_back(x.get<std::uint32_t>());
    return v;
}

}  // namespace

GoldenBasis load_golden_basis(const std::string& dir, const std::string& name) {
    json j = load_checked(dir, name);
    GoldenBasis g;
    g.d = j.at("d").get<std::size_t>();
    g.n = j.at("n").get<std::uint64_t>();
    for (const auto& row : j.at("monomials")) {
        Monomial m(to_u32(row));
        if (m.arity() != g.d || m.degree() != g.n)
            throw std::runtime_error("fixture " + name + ": malformed monomial");
        g.monomials.push_back(std::move(m));
    }
    return g;
}

dual::WitnessData load_witness(const std::string& dir) {
    json j = load_checked(dir, "transfer_witness");
    dual::WitnessData w;
    std::vector<dual::DividedMonomial> zt;
    for (const auto& row : j.at("z")) zt.push_back(dual::DividedMonomial{to_u32(row)});
    w.z = dual::DividedElement(std::move(zt));
    w.q2 = Polynomial(5);
    for (const auto& row : j.at("q2")) w.q2.add_term(Monomial(to_u32(row)));
    std::vector<lambda::Word> fw;
    for (const auto& row : j.at("f0bar")) fw.push_back(to_u32(row));
    w.f0bar = lambda::Element(std::move(fw));
    w.bounding = to_u32(j.at("bounding"));
    return w;
}

}  // namespace hk::fixtures
