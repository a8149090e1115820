public class GoodValues {
    double goodnessScore;

    boolean isGood(double value) {
        return value > 0;
    }

    void setValues(double[] values) {
    }
}
