package util;

public class Counter {
    private long total;

    public void add(int amount, boolean quickly) {
        total += amount;
    }

    public long getTotal() {
        return total;
    }
}
