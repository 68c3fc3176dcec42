package agree;

public class Max {
    static int max(int a, int b) {
        if (a > b) {
            return a;
        }
        return b;
    }
}
