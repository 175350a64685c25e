#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hitkernel/hitspace.hpp"

namespace hk::cache {

inline constexpr int kSchemaVersion = 1;

struct Entry {
    int schema = kSchemaVersion;
    std::size_t d = 0;
    std::uint64_t n = 0;
    GeneratorPolicy policy = GeneratorPolicy::PowersOfTwo;
    std::vector<std::vector<std::uint32_t>> basis;  // admissible exponent vectors
    std::size_t hit_rank = 0;
};

class CorruptCache : public std::runtime_error {
public:
    explicit CorruptCache(const std::string& what) : std::runtime_error(what) {}
};

/// Holds an advisory flock on <dir>/.lock for the process lifetime.
class DirLock {
public:
    explicit DirLock(const std::string& dir);
    ~DirLock();
    DirLock(const DirLock&) = delete;
    DirLock& operator=(const DirLock&) = delete;

private:
    int fd_ = -1;
};

std::string entry_filename(std::size_t d, std::uint64_t n, GeneratorPolicy policy);

/// Canonical JSON with an FNV hash; write-to-temporary then atomic rename.
void store(const std::string& dir, const Entry& e);

/// Verifies hash and schema; a mismatch raises CorruptCache (callers must
/// recompute rather than trust the file). Missing file returns nullopt.
std::optional<Entry> load(const std::string& dir, std::size_t d, std::uint64_t n,
                          GeneratorPolicy policy);

Entry entry_from(const AdmissibleBasis& b, GeneratorPolicy policy);

}  // namespace hk::cache
