package agree;

public class Halve {
    static int halve(int n, int limit) {
        int steps = 0;
        while (n > 1 || steps < limit) {
            n = n / 2;
            steps++;
        }
        return steps;
    }
}
