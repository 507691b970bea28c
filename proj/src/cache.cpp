#include "goalclone/cache.hpp"

#include <array>
#include <fstream>
#include <stdexcept>

#include <openssl/evp.h>
#include <unistd.h>

#include "json.hpp"

#include "goalclone/report.hpp"
#include "goalclone/trace_io.hpp"

namespace goalclone {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int cache_format = 1;

} // namespace

std::string content_hash(std::string_view bytes) {
	std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
	unsigned int length = 0;
	if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
		throw std::runtime_error("SHA-256 digest failed");
	}
	static constexpr char hex[] = "0123456789abcdef";
	std::string out;
	out.reserve(2 * length);
	for (unsigned int i = 0; i < length; ++i) {
		out += hex[digest[i] >> 4];
		out += hex[digest[i] & 0xf];
	}
	return out;
}

fs::path TraceCache::entry_path(const std::string& source) const {
	std::string name;
	for (char c : source) {
		if (c == '/' || c == '%' || c == '\\') {
			static constexpr char hex[] = "0123456789ABCDEF";
			name += '%';
			name += hex[static_cast<unsigned char>(c) >> 4];
			name += hex[static_cast<unsigned char>(c) & 0xf];
		} else {
			name += c;
		}
	}
	return dir_ / (name + ".cache.json");
}

std::optional<CachedTraceFile> TraceCache::lookup(const std::string& source, const std::string& hash) const {
	const fs::path path = entry_path(source);
	std::error_code ec;
	if (!fs::is_regular_file(path, ec)) {
		return std::nullopt;
	}
	try {
		json doc = json::parse(read_text_file(path));
		if (doc.at("format").get<int>() != cache_format || doc.at("source").get<std::string>() != source ||
			doc.at("source_hash").get<std::string>() != hash) {
			return std::nullopt;
		}
		CachedTraceFile entry;
		entry.theorems = doc.at("theorems").get<std::size_t>();
		for (const auto& r : doc.at("records")) {
			entry.records.push_back(record_from_json(r));
		}
		entry.diagnostics = doc.at("diagnostics").get<std::vector<std::string>>();
		return entry;
	} catch (const std::exception&) {
		// Unreadable or stale entries are rebuilt.
		return std::nullopt;
	}
}

void TraceCache::store(const std::string& source, const std::string& hash, const CachedTraceFile& entry) const {
	std::error_code ec;
	fs::create_directories(dir_, ec);
	if (ec) {
		throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
	}
	ordered_json records = ordered_json::array();
	for (const auto& r : entry.records) {
		records.push_back(record_to_json(r));
	}
	ordered_json doc = {
		{"format", cache_format},
		{"source", source},
		{"source_hash", hash},
		{"theorems", entry.theorems},
		{"records", std::move(records)},
		{"diagnostics", entry.diagnostics},
	};

	const fs::path target = entry_path(source);
	fs::path temp = target;
	temp += ".tmp." + std::to_string(::getpid());
	{
		std::ofstream out(temp, std::ios::binary | std::ios::trunc);
		out << doc.dump() << '\n';
		out.close();
		if (!out) {
			fs::remove(temp, ec);
			throw std::runtime_error("cannot write cache entry " + temp.string());
		}
	}
	fs::rename(temp, target, ec);
	if (ec) {
		fs::remove(temp, ec);
		throw std::runtime_error("cannot install cache entry " + target.string());
	}
}

} // namespace goalclone
