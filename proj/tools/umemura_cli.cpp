// Placeholder entry point; full verb dispatch lands with the driver layer.
#include <cstdio>

int main() {
    std::fprintf(stderr, "umemura: driver not wired yet\n");
    return 2;
}
