#include "hitkernel/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <json.hpp>

#include "hitkernel/fixtures.hpp"  // fnv hash

namespace hk::cache {

using nlohmann::json;

DirLock::DirLock(const std::string& dir) {
    const std::string path = dir + "/.lock";
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0) throw CorruptCache("cache: cannot open lock file " + path);
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
        ::close(fd_);
        fd_ = -1;
        throw CorruptCache("cache: directory is locked by another process: " + dir);
    }
}

DirLock::~DirLock() {
    if (fd_ >= 0) {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
}

std::string entry_filename(std::size_t d, std::uint64_t n, GeneratorPolicy policy) {
    std::ostringstream os;
    os << "basis_d" << d << "_n" << n << "_" << to_string(policy) << ".json";
    return os.str();
}

namespace {

json payload_of(const Entry& e) {
    json j;
    j["schema"] = e.schema;
    j["d"] = e.d;
    j["n"] = e.n;
    j["policy"] = to_string(e.policy);
    j["basis"] = e.basis;
    j["hit_rank"] = e.hit_rank;
    return j;
}

}  // namespace

void store(const std::string& dir, const Entry& e) {
    json j = payload_of(e);
    j["hash"] = fixtures::hash_hex(payload_of(e).dump());
    const std::string path = dir + "/" + entry_filename(e.d, e.n, e.policy);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CorruptCache("cache: cannot write " + tmp);
        out << j.dump(0) << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw CorruptCache("cache: rename failed for " + path);
}

std::optional<Entry> load(const std::string& dir, std::size_t d, std::uint64_t n,
                          GeneratorPolicy policy) {
    const std::string path = dir + "/" + entry_filename(d, n, policy);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& ex) {
        throw CorruptCache("cache: unparsable " + path + ": " + ex.what());
    }
    if (!j.contains("hash")) throw CorruptCache("cache: missing hash in " + path);
    std::string expect = j.at("hash").get<std::string>();
    json payload = j;
    payload.erase("hash");
    if (fixtures::hash_hex(payload.dump()) != expect)
        throw CorruptCache("cache: hash mismatch in " + path);
    Entry e;
    e.schema = j.at("schema").get<int>();
    if (e.schema != kSchemaVersion)
        throw CorruptCache("cache: schema version mismatch in " + path);
    e.d = j.at("d").get<std::size_t>();
    e.n = j.at("n").get<std::uint64_t>();
    e.policy = parse_policy(j.at("policy").get<std::string>());
    e.basis = j.at("basis").get<std::vector<std::vector<std::uint32_t>>>();
    e.hit_rank = j.at("hit_rank").get<std::size_t>();
    if (e.d != d || e.n != n || e.policy != policy)
        throw CorruptCache("cache: key mismatch in " + path);
    return e;
}

Entry entry_from(const AdmissibleBasis& b, GeneratorPolicy policy) {
    Entry e;
    e.d = b.d;
    e.n = b.n;
    e.policy = policy;
    e.hit_rank = b.hit_rank;
    for (const auto& m : b.monomials) e.basis.push_back(m.exponents);
    return e;
}

}  // namespace hk::cache
