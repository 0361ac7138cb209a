#pragma once

#include "takeuchi/sequences.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace takeuchi::cli {

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

/// Writes `content` to `path` through a temporary file in the same directory
/// and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Sequence file text followed by a "# checksum <fnv1a>" trailer line.
template <class T>
std::string sequence_with_checksum(const SequenceTable<T>& table);

/// Content-addressed store of sequence files. Disabled when the directory is
/// empty.
class SequenceCache {
public:
    explicit SequenceCache(std::filesystem::path dir, std::ostream* warnings = nullptr);

    bool enabled() const { return !dir_.empty(); }
    /// Path for (name, N, λ, domain).
    std::filesystem::path path_for(const std::string& name, std::size_t n_max, const std::string& lambda,
                                   const std::string& domain) const;

    /// Returns the cached table or computes, stores and returns it. Entries with
    /// a bad checksum or an unparseable body are recomputed and overwritten.
    template <class T>
    SequenceTable<T> get(const std::string& name, std::size_t n_max, const std::string& lambda,
                         const std::function<SequenceTable<T>()>& compute);

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    std::filesystem::path dir_;
    std::ostream* warnings_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

/// TAKEUCHI_CACHE_DIR, or empty.
std::filesystem::path default_cache_dir();

} // namespace takeuchi::cli
