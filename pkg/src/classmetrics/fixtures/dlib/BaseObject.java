package dlib;

public class BaseObject
{
    private int refCount;

    public BaseObject ()
    {
        refCount = 0;
    }

    public void retain (int delta)
    {
        if (delta > 0)
        {
            refCount = refCount + delta;
        }
    }

    public int references ()
    {
        return( refCount );
    }
}
