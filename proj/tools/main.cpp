#include <cstdio>

int main() {
    std::puts("qtcomb: cli not wired up yet");
    return 2;
}
