#include "cache.hpp"

#include "takeuchi/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace takeuchi::cli {

namespace fs = std::filesystem;

std::uint64_t fnv1a(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v)
{
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
    return s;
}

void write_atomic(const fs::path& path, const std::string& content)
{
    fs::path dir = path.parent_path();
    if (!dir.empty()) fs::create_directories(dir);
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

template <class T>
std::string sequence_with_checksum(const SequenceTable<T>& table)
{
    std::ostringstream body;
    write_sequence(body, table);
    std::string s = body.str();
    return s + "# checksum " + hex64(fnv1a(s)) + "\n";
}

SequenceCache::SequenceCache(fs::path dir, std::ostream* warnings) : dir_(std::move(dir)), warnings_(warnings) {}

fs::path SequenceCache::path_for(const std::string& name, std::size_t n_max, const std::string& lambda,
                                 const std::string& domain) const
{
    std::string key = name + "\n" + std::to_string(n_max) + "\n" + lambda + "\n" + domain;
    return dir_ / (name + "-" + std::to_string(n_max) + "-" + hex64(fnv1a(key)) + ".seq");
}

namespace {

/// Body text if the trailer checksum matches.
std::optional<std::string> verified_body(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    std::string all = ss.str();
    const std::string tag = "# checksum ";
    auto pos = all.rfind(tag);
    if (pos == std::string::npos || (pos > 0 && all[pos - 1] != '\n')) return std::nullopt;
    std::string body = all.substr(0, pos);
    std::string sum = all.substr(pos + tag.size());
    while (!sum.empty() && (sum.back() == '\n' || sum.back() == '\r')) sum.pop_back();
    if (sum != hex64(fnv1a(body))) return std::nullopt;
    return body;
}

} // namespace

template <class T>
SequenceTable<T> SequenceCache::get(const std::string& name, std::size_t n_max, const std::string& lambda,
                                    const std::function<SequenceTable<T>()>& compute)
{
    if (!enabled()) return compute();
    fs::path path = path_for(name, n_max, lambda, DomainName<T>::value);
    if (fs::exists(path)) {
        if (auto body = verified_body(path)) {
            try {
                std::istringstream in(*body);
                auto table = read_sequence<T>(in);
                if (table.max_index() == n_max) {
                    ++hits_;
                    return table;
                }
            } catch (const DomainError&) {
            }
        }
        if (warnings_)
            *warnings_ << nlohmann::json{{"warning", "corrupt cache entry regenerated"}, {"path", path.string()}}.dump()
                       << "\n";
    }
    ++misses_;
    auto table = compute();
    write_atomic(path, sequence_with_checksum(table));
    return table;
}

fs::path default_cache_dir()
{
    const char* env = std::getenv("TAKEUCHI_CACHE_DIR");
    return env ? fs::path(env) : fs::path();
}

template std::string sequence_with_checksum(const SequenceTable<BigInt>&);
template std::string sequence_with_checksum(const SequenceTable<BigRational>&);
template std::string sequence_with_checksum(const SequenceTable<GaussianRational>&);
template SequenceTable<BigInt> SequenceCache::get(const std::string&, std::size_t, const std::string&,
                                                  const std::function<SequenceTable<BigInt>()>&);
template SequenceTable<BigRational> SequenceCache::get(const std::string&, std::size_t, const std::string&,
                                                       const std::function<SequenceTable<BigRational>()>&);
template SequenceTable<GaussianRational> SequenceCache::get(const std::string&, std::size_t, const std::string&,
                                                            const std::function<SequenceTable<GaussianRational>()>&);

} // namespace takeuchi::cli
