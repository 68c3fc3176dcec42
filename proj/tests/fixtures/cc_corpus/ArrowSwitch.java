class ArrowSwitch {
    int m(int k) {
        return switch (k) {
            case 1, 2 -> 10;
            case 3 -> 20;
            default -> 0;
        };
    }
}
