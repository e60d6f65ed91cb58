#include <cstdio>
int main() { std::puts("sdc"); return 0; }
