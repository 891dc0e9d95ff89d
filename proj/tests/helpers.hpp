#ifndef BRC_TESTS_HELPERS_HPP
#define BRC_TESTS_HELPERS_HPP

#include <cstdio>
#include <string>

#include "brc/scene.hpp"
#include "brc/worldsheet.hpp"

namespace brc::testing {

inline Scene make_scene(const std::string& embedding_json, int nu, int nt,
                        double mu_lo = -2.0, double mu_hi = 2.0, bool periodic = true,
                        const std::string& u_domain = "[0.0, 6.283185307179586]") {
    char buf[1024];
    std::snprintf(buf, sizeof(buf),
                  "{\n"
                  "  \"dim\": 3,\n"
                  "  \"embedding\": %s,\n"
                  "  \"u_domain\": %s,\n"
                  "  \"t_domain\": [-1.0, 1.0],\n"
                  "  \"grid\": [%d, %d],\n"
                  "  \"mu_range\": [%g, %g],\n"
                  "  \"signs\": [\"+\", \"-\"],\n"
                  "  \"u_periodic\": [%s]\n"
                  "}",
                  embedding_json.c_str(), u_domain.c_str(), nu, nt, mu_lo, mu_hi,
                  periodic ? "true" : "false");
    return scene_from_json_text(buf);
}

inline Scene cylinder_scene(int nu = 64, int nt = 5) {
    return make_scene("[\"t\", \"cos(u1)\", \"sin(u1)\"]", nu, nt);
}

inline Scene ellipse_scene(int nu = 64, int nt = 5, double mu = 4.5) {
    return make_scene("[\"t\", \"2*cos(u1)\", \"sin(u1)\"]", nu, nt, -mu, mu);
}

inline Scene flat_scene(int nu = 32, int nt = 5) {
    return make_scene("[\"t\", \"u1\", \"0\"]", nu, nt, -2.0, 2.0, false, "[-1.0, 1.0]");
}

}  // namespace brc::testing

#endif
