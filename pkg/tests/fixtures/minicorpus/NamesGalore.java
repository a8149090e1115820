public class NamesGalore {
    int XMLHttpRequest2Count;
    String MAX_VALUE_NAME;

    void parseHTMLQuickly(int htmlSize) {
    }
}
