#include "pcn/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <sstream>

namespace pcn {

std::string graph_digest(const Graph& g)
{
    std::ostringstream payload;
    payload << "n=" << g.order() << ";";
    for (const EdgeRef& e : g.edges())
        payload << e.u << "-" << e.v << ";";
    const std::string bytes = payload.str();

    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr);

    std::string hex(2 * len, '0');
    for (unsigned int i = 0; i < len; ++i)
        std::snprintf(hex.data() + 2 * i, 3, "%02x", md[i]);
    return hex;
}

} // namespace pcn
