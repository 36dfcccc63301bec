#include <cstdio>
int main() { std::puts("tmw"); return 0; }
